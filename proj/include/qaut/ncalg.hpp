#pragma once

// Noncommutative *-polynomials over Q(i) in indexed generators.
//
// A generator is packed into a single 64-bit key whose numeric order is the
// generator order used everywhere in the engine:
//
//   (tensor leg, starred, family, indices...)
//
// so comparing two generators is one integer comparison. Words are ordered
// degree-lexicographically. Polynomials keep their terms sorted by strictly
// descending word, with no zero coefficients stored.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qaut/gaussq.hpp"

namespace qaut {

enum class Family : std::uint8_t {
  X = 0,       ///< a_{ij}, quantum permutations of X_n
  M = 1,       ///< a^{kl}_{ij}, stored as (k,l,i,j)
  B = 2,       ///< a^{kl}_{rs,xy}, stored as (k,l,r,s,x,y)
  U = 3,       ///< generic matrix entry u_{ij}
  Letter = 4,  ///< free letter x_i, used for ad-hoc algebras
};

int family_arity(Family f);

class Gen {
 public:
  static constexpr int kMaxIndex = 255;
  static constexpr int kMaxLeg = 3;

  constexpr Gen() = default;

  /// Throws std::out_of_range if an index is outside [0, 255] or the
  /// number of indices does not match the family.
  static Gen make(Family family, std::initializer_list<int> indices,
                  bool starred = false, int leg = 0);
  static Gen make(Family family, const std::vector<int>& indices,
                  bool starred = false, int leg = 0);

  static Gen x(int i, int j) { return make(Family::X, {i, j}); }
  static Gen m(int k, int l, int i, int j) { return make(Family::M, {k, l, i, j}); }
  static Gen b(int k, int l, int r, int s, int x, int y) {
    return make(Family::B, {k, l, r, s, x, y});
  }
  static Gen u(int i, int j) { return make(Family::U, {i, j}); }
  static Gen letter(int i) { return make(Family::Letter, {i}); }

  Family family() const { return static_cast<Family>((key_ >> 58) & 0x7u); }
  int arity() const { return family_arity(family()); }
  int index(int pos) const;
  std::vector<int> indices() const;
  bool starred() const { return ((key_ >> 61) & 1u) != 0; }
  /// Tensor leg: 0 for a single algebra, 1..3 for the legs of A^{⊗k}.
  int leg() const { return static_cast<int>(key_ >> 62); }

  Gen star() const { return Gen(key_ ^ (std::uint64_t{1} << 61)); }
  Gen unstarred() const { return Gen(key_ & ~(std::uint64_t{1} << 61)); }
  Gen on_leg(int leg) const;

  std::uint64_t key() const { return key_; }
  std::string str() const;
  /// Inverse of str(); nullopt on malformed input.
  static std::optional<Gen> parse(std::string_view text);

  friend constexpr auto operator<=>(Gen a, Gen b) = default;

 private:
  explicit constexpr Gen(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

/// Finite sequence of generators; the empty word is the unit.
class Word {
 public:
  using Storage = boost::container::small_vector<Gen, 6>;

  Word() = default;
  Word(std::initializer_list<Gen> letters) : letters_(letters) {}
  explicit Word(Storage letters) : letters_(std::move(letters)) {}
  template <typename It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t size() const { return letters_.size(); }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Gen operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix_from(std::size_t pos) const { return sub(pos, size() - pos); }
  /// True if `w` occurs in this word starting at `pos`.
  bool occurs_at(const Word& w, std::size_t pos) const;
  std::optional<std::size_t> find(const Word& w) const;

  /// Reversed word with every letter starred.
  Word star() const;
  /// Legs appear in nondecreasing order (left tensor factors first).
  bool legs_sorted() const;

  friend Word operator*(const Word& a, const Word& b);
  friend Word concat3(const Word& a, const Word& b, const Word& c);

  /// Degree-lexicographic order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

  std::size_t hash() const;
  std::string str() const;

 private:
  Storage letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

struct Term {
  Word word;
  GaussQ coeff;
};

class MissingImage : public std::runtime_error {
 public:
  explicit MissingImage(Gen g)
      : std::runtime_error("no image assigned to generator " + g.str()), gen_(g) {}
  Gen gen() const { return gen_; }

 private:
  Gen gen_;
};

class NCPoly {
 public:
  NCPoly() = default;

  static NCPoly constant(const GaussQ& c);
  static NCPoly one() { return constant(GaussQ(1)); }
  static NCPoly gen(Gen g, const GaussQ& c = GaussQ(1));
  static NCPoly monomial(Word w, const GaussQ& c = GaussQ(1));
  /// Sorts, merges equal words and drops zero coefficients.
  static NCPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Largest word; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  std::size_t degree() const;
  /// Coefficient of `w`, zero if absent.
  GaussQ coeff(const Word& w) const;
  bool is_constant() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const GaussQ& c);

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const GaussQ& c, NCPoly p) { return p *= c; }
  friend NCPoly operator*(NCPoly p, const GaussQ& c) { return p *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b);

  /// u * p * v for words u, v.
  NCPoly sandwich(const Word& left, const Word& right) const;

  /// Involutive anti-automorphism: reverses words, stars letters,
  /// conjugates coefficients.
  NCPoly star() const;

  /// Divides by the leading coefficient.
  NCPoly monic() const;

  /// Every generator that occurs (starred or not), sorted.
  std::vector<Gen> generators() const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

NCPoly add(const NCPoly& p, const NCPoly& q);
NCPoly mul(const NCPoly& p, const NCPoly& q);
NCPoly star(const NCPoly& p);
NCPoly commutator(const NCPoly& p, const NCPoly& q);

/// Images of unstarred generators.
using Substitution = std::map<Gen, NCPoly>;

/// Unital *-algebra morphism extending `phi`. A starred letter maps to the
/// star of its unstarred image unless `phi` names the starred letter
/// explicitly. Throws MissingImage for an unassigned generator.
NCPoly substitute(const NCPoly& p, const Substitution& phi);
NCPoly substitute(const NCPoly& p, const std::function<std::optional<NCPoly>(Gen)>& phi);

/// Linear map sending a word g1...gk to phi(gk)...phi(g1); used for
/// anti-homomorphisms such as the antipode.
NCPoly substitute_reversed(const NCPoly& p, const std::function<std::optional<NCPoly>(Gen)>& phi);

/// Relabels every letter onto tensor leg `leg`.
NCPoly on_leg(const NCPoly& p, int leg);

}  // namespace qaut

template <>
struct std::hash<qaut::Word> {
  std::size_t operator()(const qaut::Word& w) const { return w.hash(); }
};
