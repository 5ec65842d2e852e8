#pragma once

// Hopf structure checks. Tensor powers of A are modelled by tagging letters
// with a leg (1, 2, 3); letters on different legs commute.

#include <memory>
#include <optional>
#include <vector>

#include "qaut/presentations.hpp"
#include "qaut/report.hpp"
#include "qaut/rewrite.hpp"

namespace qaut {

/// Rewrite system for A^{(x) copies}: the single-copy rules on every leg plus
/// right-leg-letter . left-leg-letter -> left . right for every irreducible
/// letter pair. `letters` are the unstarred generators of A.
RewriteSystem tensor_power_system(const RewriteSystem& single, const std::vector<Gen>& letters,
                                  int copies);

/// Letters (generators and their stars) that are normal forms of the system.
std::vector<Gen> irreducible_letters(const RewriteSystem& sys, const std::vector<Gen>& letters);

/// A presentation together with its completed system and, on demand, the
/// doubled and tripled systems.
class HopfContext {
 public:
  explicit HopfContext(Presentation p, CompletionLimits limits = {}, const TraceSink& trace = {});
  HopfContext(Presentation p, RewriteSystem single);

  const Presentation& presentation() const { return p_; }
  const RewriteSystem& single() const { return single_; }
  const RewriteSystem& doubled() const;
  const RewriteSystem& tripled() const;

 private:
  Presentation p_;
  RewriteSystem single_;
  mutable std::optional<RewriteSystem> doubled_;
  mutable std::optional<RewriteSystem> tripled_;
};

/// Phi applied to each defining relation vanishes in A (x) A.
StructureReport check_coproduct_well_defined(const HopfContext& ctx);
/// (Phi (x) id) Phi = (id (x) Phi) Phi on generators.
StructureReport check_coassociativity(const HopfContext& ctx);
/// (eps (x) id) Phi = id = (id (x) eps) Phi on generators, and eps kills
/// every relation.
StructureReport check_counit(const HopfContext& ctx);
/// kappa(g_(1)) g_(2) = eps(g) = g_(1) kappa(g_(2)) on generators, and the
/// order-reversing substitution kills every relation when kappa is
/// *-preserving.
StructureReport check_antipode(const HopfContext& ctx);
/// Entries of u u^* - I, u^* u - I, conj(u) conj(u)^* - I, conj(u)^* conj(u) - I.
StructureReport check_kac_unitarity(const HopfContext& ctx);
/// u u^t - I and u^t u - I.
StructureReport check_orthogonality(const HopfContext& ctx);
/// Every commutator of two generators vanishes.
StructureReport check_commutativity(const HopfContext& ctx);

/// Every source relation maps to zero in the target system.
StructureReport check_morphism(const Presentation& src, const RewriteSystem& dst,
                               const Substitution& phi, std::string check = "morphism");

/// Applies Phi to every letter of p, moving leg L to legs {L, L+1} and legs
/// above L up by one.
NCPoly apply_coproduct_on_leg(const NCPoly& p, const Presentation& pres, int leg);

}  // namespace qaut
