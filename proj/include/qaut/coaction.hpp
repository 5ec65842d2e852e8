#pragma once

// The coaction alpha(e_b) = sum_a e_a (x) u_ab of A on the finite space B.

#include <stdexcept>
#include <vector>

#include "qaut/finite_space.hpp"
#include "qaut/hopf.hpp"
#include "qaut/presentations.hpp"
#include "qaut/report.hpp"

namespace qaut {

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of B (x) A: one NCPoly per basis vector of B.
class BTensorElement {
 public:
  explicit BTensorElement(const FiniteSpace& space) : space_(&space), c_(space.dim()) {}

  const FiniteSpace& space() const { return *space_; }
  std::size_t size() const { return c_.size(); }
  const NCPoly& operator[](std::size_t a) const { return c_[a]; }
  NCPoly& operator[](std::size_t a) { return c_[a]; }
  bool is_zero() const;

  /// b (x) 1 for b given in coordinates.
  static BTensorElement scalar(const FiniteSpace& space, const std::vector<GaussQ>& b);

  BTensorElement star() const;
  friend BTensorElement operator*(const BTensorElement& x, const BTensorElement& y);
  friend BTensorElement operator-(const BTensorElement& x, const BTensorElement& y);
  friend BTensorElement operator*(const GaussQ& s, const BTensorElement& x);

 private:
  const FiniteSpace* space_;
  std::vector<NCPoly> c_;
};

/// alpha applied to the B-element with coordinates b. Throws ShapeMismatch
/// when the presentation does not act on this space.
BTensorElement alpha(const FiniteSpace& space, const Presentation& p, const std::vector<GaussQ>& b);
BTensorElement alpha_basis(const FiniteSpace& space, const Presentation& p, std::size_t b);

/// alpha(e f) = alpha(e) alpha(f) on basis pairs.
StructureReport check_homomorphism(const FiniteSpace& space, const HopfContext& ctx);
/// alpha(e^*) = alpha(e)^*.
StructureReport check_star(const FiniteSpace& space, const HopfContext& ctx);
/// alpha(1) = 1 (x) 1.
StructureReport check_unital(const FiniteSpace& space, const HopfContext& ctx);
/// (id (x) Phi) alpha = (alpha (x) id) alpha.
StructureReport check_coaction_square(const FiniteSpace& space, const HopfContext& ctx);
/// (id (x) eps) alpha = id.
StructureReport check_counit_action(const FiniteSpace& space, const HopfContext& ctx);
/// (phi (x) id) alpha(e) = phi(e) 1 for every basis element.
StructureReport check_invariant_functional(const FiniteSpace& space, const HopfContext& ctx,
                                           const std::vector<GaussQ>& weights);
/// Faithfulness, finite shadow: the components of alpha on the basis span
/// the generators linearly.
StructureReport check_generator_span(const FiniteSpace& space, const HopfContext& ctx);

}  // namespace qaut
