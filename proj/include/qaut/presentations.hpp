#pragma once

// Generators-and-relations presentations of the quantum automorphism groups
// and their structure maps, all expressed through the fundamental matrix u.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaut/finite_space.hpp"
#include "qaut/matrix.hpp"
#include "qaut/ncalg.hpp"
#include "qaut/rewrite.hpp"

namespace qaut {

enum class SpaceKind { Points, Matrices, Blocks, Generic };
enum class Variant { Aut, QAut, AoNew, AoOld, Au };

std::string to_string(SpaceKind kind);
std::string to_string(Variant variant);

/// X(n) = n one-dimensional blocks, M(n) = a single n-block, or a block list.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::Points;
  std::vector<int> blocks;

  static SpaceSpec points(int n);
  static SpaceSpec matrices(int n);
  static SpaceSpec block_list(std::vector<int> blocks);

  FiniteSpace space() const { return FiniteSpace(blocks); }
  std::string str() const;
};

struct Relation {
  std::string family;  // "1".."16" for numbered families, descriptive otherwise
  NCPoly poly;
};

struct Presentation {
  std::string name;
  SpaceKind kind = SpaceKind::Generic;
  Variant variant = Variant::Aut;
  /// Blocks of the space acted on; empty for the appendix quantum groups.
  std::vector<int> blocks;
  /// Unstarred generators in instantiation order.
  std::vector<Gen> generators;
  std::vector<Relation> relations;
  std::size_t dim = 0;
  /// Fundamental matrix, row-major dim x dim.
  std::vector<Gen> u;
  std::optional<QMatrix> q;
  /// Images in the doubled algebra (legs 1 and 2).
  std::map<Gen, NCPoly> coproduct;
  std::map<Gen, GaussQ> counit;
  std::map<Gen, NCPoly> antipode;
  /// Whether the antipode is *-preserving, so kappa(g^*) = kappa(g)^*.
  bool kac = true;
  std::vector<PositivityFamily> positivity;

  Gen entry(std::size_t row, std::size_t col) const { return u[row * dim + col]; }
  PolyMatrix fundamental() const;
  std::size_t count(std::string_view family) const;
  std::vector<std::string> families() const;
  std::vector<NCPoly> relation_polys() const;
  std::optional<FiniteSpace> space() const;
  bool has_generator(Gen g) const;
};

/// Self-adjoint idempotents with unit row and column sums; coproduct
/// a_ij -> sum_k a_ik (x) a_kj. Family labels are listed in docs/relations.md.
Presentation magic_presentation(int n);
/// Generators a^{kl}_{ij}: alpha(e_ij) = sum e_kl (x) a^{kl}_{ij} is a unital
/// *-homomorphism that preserves the trace.
Presentation aut_Mn_presentation(int n);
/// The same for a direct sum of matrix blocks, preserving the weighted trace psi.
Presentation aut_B_presentation(const std::vector<int>& blocks);
Presentation aut_presentation(const SpaceSpec& spec);

/// Q-twisted variants: the multiplicative, adjoint and unit families are kept
/// and u^t Q u Q^{-1} = I = Q u Q^{-1} u^t replaces the untwisted
/// orthogonality or trace family. Q is indexed like u. Throws
/// DimensionMismatch or NotPositive.
Presentation q_aut_presentation(const SpaceSpec& spec, const QMatrix& q);

/// conj(u) = u with u^t Q u Q^{-1} = I = Q u Q^{-1} u^t.
Presentation ao_new_presentation(const QMatrix& q);
/// A_o_new(Q) together with u u^t = I = u^t u.
Presentation ao_old_presentation(const QMatrix& q);
/// u and conj(u) both unitary.
Presentation au_presentation(int n);

/// Presentation with the named relation families removed.
Presentation without_families(const Presentation& p, const std::vector<std::string>& families);

/// Orients and completes the relations together with the positivity families.
RewriteSystem build_system(const Presentation& p, CompletionLimits limits = {},
                           const TraceSink& trace = {});

// Morphisms between presentations, as images of the source generators.

/// aut_B(blocks) -> aut_M(n_{k0}): block k0 carries the M-generators and every
/// other block is acted on trivially.
Substitution block_to_matrix_morphism(const std::vector<int>& blocks, int k0);
/// The same map with the trivial-block term left out, as first written down.
Substitution block_to_matrix_morphism_literal(const std::vector<int>& blocks, int k0);
/// aut_B(n,...,n) with m blocks -> magic(m): a^{kl}_{rs,xy} -> delta_kr delta_ls a_xy.
Substitution block_to_points_morphism(int m, int n);
/// aut_M(n) -> A_u(n): a^{kl}_{ij} -> u_ki u_lj^*.
Substitution matrix_to_au_morphism(int n);

}  // namespace qaut
