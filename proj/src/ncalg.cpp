#include "qaut/ncalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qaut {

namespace {

constexpr int kIndexBits = 8;
constexpr int kIndexSlots = 6;

std::uint64_t pack(Family family, const int* idx, std::size_t n, bool starred, int leg) {
  if (static_cast<int>(n) != family_arity(family)) {
    throw std::out_of_range("Gen::make: wrong number of indices for family");
  }
  if (leg < 0 || leg > Gen::kMaxLeg) throw std::out_of_range("Gen::make: leg out of range");
  std::uint64_t key = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (idx[s] < 0 || idx[s] > Gen::kMaxIndex) {
      throw std::out_of_range("Gen::make: index out of range");
    }
    const int shift = (kIndexSlots - 1 - static_cast<int>(s)) * kIndexBits;
    key |= static_cast<std::uint64_t>(idx[s]) << shift;
  }
  key |= static_cast<std::uint64_t>(family) << 58;
  key |= static_cast<std::uint64_t>(starred ? 1 : 0) << 61;
  key |= static_cast<std::uint64_t>(leg) << 62;
  return key;
}

void append_coeff(std::ostringstream& os, const GaussQ& c, bool first, bool has_word) {
  GaussQ shown = c;
  if (c.is_real()) {
    if (sgn(c.re()) < 0) {
      os << (first ? "-" : " - ");
      shown = -c;
    } else if (!first) {
      os << " + ";
    }
    if (!has_word || !shown.is_one()) {
      os << shown.str();
      if (has_word) os << ' ';
    }
    return;
  }
  if (!first) os << " + ";
  os << '(' << c.str() << ')';
  if (has_word) os << ' ';
}

}  // namespace

int family_arity(Family f) {
  switch (f) {
    case Family::X: return 2;
    case Family::M: return 4;
    case Family::B: return 6;
    case Family::U: return 2;
    case Family::Letter: return 1;
  }
  return 0;
}

Gen Gen::make(Family family, std::initializer_list<int> indices, bool starred, int leg) {
  return Gen(pack(family, indices.begin(), indices.size(), starred, leg));
}

Gen Gen::make(Family family, const std::vector<int>& indices, bool starred, int leg) {
  return Gen(pack(family, indices.data(), indices.size(), starred, leg));
}

int Gen::index(int pos) const {
  const int shift = (kIndexSlots - 1 - pos) * kIndexBits;
  return static_cast<int>((key_ >> shift) & 0xFFu);
}

std::vector<int> Gen::indices() const {
  std::vector<int> out(static_cast<std::size_t>(arity()));
  for (int i = 0; i < arity(); ++i) out[static_cast<std::size_t>(i)] = index(i);
  return out;
}

Gen Gen::on_leg(int leg) const {
  if (leg < 0 || leg > kMaxLeg) throw std::out_of_range("Gen::on_leg");
  return Gen((key_ & ~(std::uint64_t{3} << 62)) | (static_cast<std::uint64_t>(leg) << 62));
}

std::string Gen::str() const {
  std::ostringstream os;
  auto idx = [&](int p) { return index(p); };
  switch (family()) {
    case Family::X: os << "a[" << idx(0) << ',' << idx(1) << ']'; break;
    case Family::M:
      os << "a[" << idx(0) << ',' << idx(1) << '|' << idx(2) << ',' << idx(3) << ']';
      break;
    case Family::B:
      os << "a[" << idx(0) << ',' << idx(1) << '|' << idx(2) << ',' << idx(3) << '|' << idx(4)
         << ',' << idx(5) << ']';
      break;
    case Family::U: os << "u[" << idx(0) << ',' << idx(1) << ']'; break;
    case Family::Letter: os << "x[" << idx(0) << ']'; break;
  }
  if (starred()) os << '*';
  if (leg() != 0) os << '@' << leg();
  return os.str();
}

std::optional<Gen> Gen::parse(std::string_view text) {
  if (text.size() < 4 || text[1] != '[') return std::nullopt;
  const char head = text[0];
  std::size_t pos = 2;
  std::vector<int> idx;
  while (true) {
    int v = 0;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && digits < 4) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0 || pos >= text.size()) return std::nullopt;
    idx.push_back(v);
    const char sep = text[pos++];
    if (sep == ']') break;
    if (sep != ',' && sep != '|') return std::nullopt;
  }
  bool starred = false;
  int leg = 0;
  if (pos < text.size() && text[pos] == '*') {
    starred = true;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '@') {
    if (pos + 2 != text.size() || text[pos + 1] < '0' || text[pos + 1] > '3') return std::nullopt;
    leg = text[pos + 1] - '0';
    pos += 2;
  }
  if (pos != text.size()) return std::nullopt;
  Family family;
  if (head == 'a' && idx.size() == 2) {
    family = Family::X;
  } else if (head == 'a' && idx.size() == 4) {
    family = Family::M;
  } else if (head == 'a' && idx.size() == 6) {
    family = Family::B;
  } else if (head == 'u' && idx.size() == 2) {
    family = Family::U;
  } else if (head == 'x' && idx.size() == 1) {
    family = Family::Letter;
  } else {
    return std::nullopt;
  }
  try {
    return make(family, idx, starred, leg);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
              letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

bool Word::occurs_at(const Word& w, std::size_t pos) const {
  if (pos + w.size() > size()) return false;
  return std::equal(w.letters_.begin(), w.letters_.end(),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& w) const {
  if (w.size() > size()) return std::nullopt;
  for (std::size_t p = 0; p + w.size() <= size(); ++p) {
    if (occurs_at(w, p)) return p;
  }
  return std::nullopt;
}

Word Word::star() const {
  Storage out;
  out.reserve(size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->star());
  return Word(std::move(out));
}

bool Word::legs_sorted() const {
  for (std::size_t i = 1; i < size(); ++i) {
    if (letters_[i - 1].leg() > letters_[i].leg()) return false;
  }
  return true;
}

Word operator*(const Word& a, const Word& b) {
  Word::Storage out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word concat3(const Word& a, const Word& b, const Word& c) {
  Word::Storage out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  out.insert(out.end(), c.letters_.begin(), c.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.letters_[i] != b.letters_[i]) return a.letters_[i] <=> b.letters_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Word::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Gen g : letters_) {
    h ^= g.key() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------

NCPoly NCPoly::constant(const GaussQ& c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.push_back({Word{}, c});
  return p;
}

NCPoly NCPoly::gen(Gen g, const GaussQ& c) { return monomial(Word{g}, c); }

NCPoly NCPoly::monomial(Word w, const GaussQ& c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.push_back({std::move(w), c});
  return p;
}

NCPoly NCPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.word > b.word; });
  NCPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().word == t.word) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

std::size_t NCPoly::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.word.size());
  return d;
}

GaussQ NCPoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return t.word > key; });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return GaussQ(0);
}

bool NCPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].word.empty());
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].word > b[j].word)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].word > a[i].word) {
      out.push_back({b[j].word, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      GaussQ c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].word, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

NCPoly& NCPoly::operator*=(const GaussQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  NCPoly r = a;
  r += b;
  return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
  NCPoly r = a;
  r -= b;
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.word * t.word, s.coeff * t.coeff});
  }
  return NCPoly::from_terms(std::move(out));
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].word == b.terms_[i].word) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

NCPoly NCPoly::sandwich(const Word& left, const Word& right) const {
  // Multiplying every word by fixed words on both sides preserves the order.
  NCPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({concat3(left, t.word, right), t.coeff});
  return p;
}

NCPoly NCPoly::star() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.word.star(), t.coeff.conj()});
  return from_terms(std::move(out));
}

NCPoly NCPoly::monic() const {
  if (is_zero()) return *this;
  const GaussQ inv = GaussQ(1) / leading().coeff;
  NCPoly p = *this;
  p *= inv;
  return p;
}

std::vector<Gen> NCPoly::generators() const {
  std::set<Gen> seen;
  for (const auto& t : terms_) seen.insert(t.word.begin(), t.word.end());
  return {seen.begin(), seen.end()};
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    append_coeff(os, t.coeff, first, !t.word.empty());
    if (!t.word.empty()) os << t.word.str();
    first = false;
  }
  return os.str();
}

NCPoly add(const NCPoly& p, const NCPoly& q) { return p + q; }
NCPoly mul(const NCPoly& p, const NCPoly& q) { return p * q; }
NCPoly star(const NCPoly& p) { return p.star(); }
NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

namespace {

template <typename Lookup>
NCPoly substitute_impl(const NCPoly& p, Lookup&& image_of, bool reversed) {
  std::map<Gen, NCPoly> cache;
  auto image = [&](Gen g) -> const NCPoly& {
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    return cache.emplace(g, image_of(g)).first->second;
  };
  NCPoly result;
  for (const auto& t : p.terms()) {
    NCPoly acc = NCPoly::constant(t.coeff);
    if (!reversed) {
      for (Gen g : t.word) {
        acc = acc * image(g);
        if (acc.is_zero()) break;
      }
    } else {
      for (auto it = t.word.end(); it != t.word.begin();) {
        --it;
        acc = acc * image(*it);
        if (acc.is_zero()) break;
      }
    }
    result += acc;
  }
  return result;
}

}  // namespace

NCPoly substitute(const NCPoly& p, const std::function<std::optional<NCPoly>(Gen)>& phi) {
  return substitute_impl(
      p,
      [&](Gen g) {
        if (auto direct = phi(g)) return *direct;
        if (g.starred()) {
          if (auto base = phi(g.unstarred())) return base->star();
        }
        throw MissingImage(g.unstarred());
      },
      false);
}

NCPoly substitute(const NCPoly& p, const Substitution& phi) {
  return substitute(p, [&](Gen g) -> std::optional<NCPoly> {
    auto it = phi.find(g);
    if (it == phi.end()) return std::nullopt;
    return it->second;
  });
}

NCPoly substitute_reversed(const NCPoly& p,
                           const std::function<std::optional<NCPoly>(Gen)>& phi) {
  return substitute_impl(
      p,
      [&](Gen g) {
        if (auto direct = phi(g)) return *direct;
        if (g.starred()) {
          if (auto base = phi(g.unstarred())) return base->star();
        }
        throw MissingImage(g.unstarred());
      },
      true);
}

NCPoly on_leg(const NCPoly& p, int leg) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Word::Storage letters;
    for (Gen g : t.word) letters.push_back(g.on_leg(leg));
    out.push_back({Word(std::move(letters)), t.coeff});
  }
  return NCPoly::from_terms(std::move(out));
}

}  // namespace qaut
