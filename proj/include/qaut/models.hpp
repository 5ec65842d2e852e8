#pragma once

// Characters (classical points) and finite-dimensional numeric
// *-representations of the presentations.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qaut/matrix.hpp"
#include "qaut/presentations.hpp"
#include "qaut/report.hpp"

namespace qaut {

using CMatrix = Eigen::MatrixXcd;

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnitary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values of a unital *-homomorphism A -> C on the unstarred generators.
struct Character {
  std::map<Gen, GaussQ> values;
};

/// Exact value of p; starred letters take conjugate values. Throws MissingValue.
GaussQ evaluate(const NCPoly& p, const Character& chi);

/// 1-based images sigma(1..n); the character is a_ij -> [i == sigma(j)].
using Permutation = std::vector<int>;

Character permutation_character(const Permutation& sigma);
/// Reads a permutation back from a 0/1 character of a magic presentation.
Permutation character_permutation(const Character& chi, int n);

inline constexpr int kDefaultCharacterCap = 6;

/// All characters of magic(n), in lexicographic order of sigma.
std::vector<Character> enumerate_characters_magic(int n, int cap = kDefaultCharacterCap);
/// Permutation characters that also satisfy u^t Q u Q^{-1} = I = Q u Q^{-1} u^t.
/// Q must be diagonal with positive rational entries.
std::vector<Character> characters_magic_q(int n, const QMatrix& q, int cap = kDefaultCharacterCap);

/// Pass iff every relation vanishes exactly. On M(n) presentations the
/// induced map e_ij -> sum chi(a^{kl}_{ij}) e_kl is also checked to be a
/// unital *-automorphism.
StructureReport check_character(const Presentation& p, const Character& chi);

/// chi(a^{kl}_{ij}) = w_ki conj(w_lj), the character of aut_M(n) given by Ad_w.
Character inner_character(const QMatrix& w);

/// A *-representation on C^dim; starred letters map to adjoints.
struct NumericRep {
  std::size_t dim = 1;
  std::map<Gen, CMatrix> images;
  double tolerance = 1e-9;
};

CMatrix evaluate(const NCPoly& p, const NumericRep& rep);
double operator_norm(const CMatrix& m);

/// magic(4) on C^2 through u = [[p,1-p,0,0],[1-p,p,0,0],[0,0,q,1-q],[0,0,1-q,q]],
/// p = diag(1,0) and q the projection onto (cos theta, sin theta).
/// theta must lie in (0, pi/2).
NumericRep two_projection_rep(double theta);

/// A_u(n) on C^d with u_ij = w_ij D_j for a unitary w and unitaries D_j.
NumericRep au_twisted_rep(const CMatrix& w, const std::vector<CMatrix>& d);
/// Pulls a representation of the target back along phi (source generator ->
/// target polynomial).
NumericRep pull_back(const NumericRep& rep, const Substitution& phi);
/// aut_M(n) through a^{kl}_{ij} -> w_ki conj(w_lj). Throws NotUnitary.
NumericRep au_model_rep(const CMatrix& w, double tolerance = 1e-9);
/// Characters of magic(n) as one-dimensional representations.
NumericRep character_rep(const Character& chi);

struct NumericReport {
  double max_residual = 0.0;
  std::string worst;
  std::size_t checked = 0;
  bool within_tolerance = true;
};

/// Largest operator-norm residual over the relations and any extra
/// polynomials. Throws MissingImage.
NumericReport numeric_verify(const Presentation& p, const NumericRep& rep,
                             const std::vector<Identity>& extra = {});

/// Positive square root by eigendecomposition of the symmetrized matrix.
CMatrix sqrt_positive(const CMatrix& q);
/// Random Hermitian positive definite matrix.
CMatrix random_positive(int dim, std::uint64_t seed);
/// Random unitary (QR of a Gaussian matrix).
CMatrix random_unitary(int dim, std::uint64_t seed);

struct AppendixReport {
  /// u = Q^{-1/2} w Q^{1/2} for random unitary w: residual of the twisted
  /// relations and of v^* v - I, v v^* - I for v = Q^{1/2} u Q^{-1/2}.
  double twisted_residual = 0.0;
  double unitary_residual = 0.0;
  /// A non-unitary u: both sides must fail together.
  double broken_twisted_residual = 0.0;
  double broken_unitary_residual = 0.0;
  /// Reindexed P and P~ (built from Q^{-1}) on the M_n (x) M_n scheme.
  double p_inverse_residual = 0.0;
  /// Same with P~ built from the entries of Q itself.
  double literal_p_inverse_residual = 0.0;
  bool pass = false;
};

/// The v = Q^{1/2} u Q^{-1/2} equivalence in dimension m and the P P~ = I
/// reindexing for Q on C^n (x) C^n. Throws NotPositive.
AppendixReport appendix_q_checks(const CMatrix& q_m, const CMatrix& q_nn, int n,
                                 std::uint64_t seed, double tol = 1e-9);

struct ClassicalPoints {
  std::vector<Permutation> first;
  std::vector<Permutation> second;
  bool distinct = false;
};

ClassicalPoints classical_point_discrepancy(int n, const QMatrix& q1, const QMatrix& q2,
                                            int cap = kDefaultCharacterCap);

nlohmann::json to_json(const NumericRep& rep);
NumericRep numeric_rep_from_json(const nlohmann::json& j);

}  // namespace qaut
