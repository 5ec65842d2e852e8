#include <doctest.h>

#include "qaut/coaction.hpp"
#include "support.hpp"

using namespace qaut;

namespace {

void require_coaction(const SpaceSpec& spec) {
  const FiniteSpace space = spec.space();
  const HopfContext ctx(aut_presentation(spec));
  INFO(spec.str());
  CHECK(check_homomorphism(space, ctx).verdict == Verdict::Pass);
  CHECK(check_star(space, ctx).verdict == Verdict::Pass);
  CHECK(check_unital(space, ctx).verdict == Verdict::Pass);
  CHECK(check_coaction_square(space, ctx).verdict == Verdict::Pass);
  CHECK(check_counit_action(space, ctx).verdict == Verdict::Pass);
  CHECK(check_invariant_functional(space, ctx, space.psi_weights()).verdict == Verdict::Pass);
  CHECK(check_generator_span(space, ctx).verdict == Verdict::Pass);
}

}  // namespace

TEST_SUITE("coaction") {
  TEST_CASE("coaction axioms on the shipped spaces") {
    require_coaction(SpaceSpec::points(2));
    require_coaction(SpaceSpec::points(3));
    require_coaction(SpaceSpec::matrices(2));
    require_coaction(SpaceSpec::block_list({1, 2}));
  }

  TEST_CASE("alpha on basis vectors") {
    const FiniteSpace x2 = FiniteSpace::points(2);
    const Presentation p = magic_presentation(2);
    const BTensorElement e1 = alpha_basis(x2, p, 0);
    CHECK(e1[0] == NCPoly::gen(Gen::x(1, 1)));
    CHECK(e1[1] == NCPoly::gen(Gen::x(2, 1)));
    CHECK(alpha(x2, p, {GaussQ(0), GaussQ(0)}).is_zero());
    CHECK_THROWS_AS(alpha(FiniteSpace::points(3), p, {GaussQ(1), GaussQ(0), GaussQ(0)}), ShapeMismatch);
  }

  TEST_CASE("alpha is linear") {
    qaut::testing::Rng rng(51);
    const FiniteSpace b = FiniteSpace({1, 2});
    const Presentation p = aut_B_presentation({1, 2});
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<GaussQ> x(b.dim()), y(b.dim()), sum(b.dim()), scaled(b.dim());
      const GaussQ c = rng.nonzero_scalar();
      for (std::size_t k = 0; k < b.dim(); ++k) {
        x[k] = rng.scalar();
        y[k] = rng.scalar();
        sum[k] = x[k] + y[k];
        scaled[k] = c * x[k];
      }
      const BTensorElement ax = alpha(b, p, x), ay = alpha(b, p, y);
      CHECK((alpha(b, p, sum) - ax - ay).is_zero());
      CHECK((alpha(b, p, scaled) - c * ax).is_zero());
    }
  }

  TEST_CASE("uniform measure on X_n is invariant") {
    for (int n = 2; n <= 4; ++n) {
      const FiniteSpace s = FiniteSpace::points(n);
      const HopfContext ctx(magic_presentation(n));
      const std::vector<GaussQ> uniform(static_cast<std::size_t>(n), GaussQ::fraction(1, n));
      CHECK(check_invariant_functional(s, ctx, uniform).verdict == Verdict::Pass);
    }
  }

  TEST_CASE("a point mass is not invariant") {
    const FiniteSpace s = FiniteSpace::points(2);
    const HopfContext ctx(magic_presentation(2));
    const StructureReport r = check_invariant_functional(s, ctx, {GaussQ(1), GaussQ(0)});
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == NCPoly::gen(Gen::x(1, 1)) - NCPoly::one());
  }

  TEST_CASE("a presentation missing relations fails the homomorphism check") {
    const FiniteSpace s = FiniteSpace::matrices(2);
    const HopfContext ctx(without_families(aut_Mn_presentation(2), {"5"}));
    CHECK(check_homomorphism(s, ctx).verdict == Verdict::Fail);
    CHECK_THROWS_AS(check_invariant_functional(s, ctx, {GaussQ(1)}), ShapeMismatch);
  }

  TEST_CASE("products in B (x) A") {
    const FiniteSpace m2 = FiniteSpace::matrices(2);
    BTensorElement e12(m2), e21(m2);
    e12[m2.index(1, 2, 1)] = NCPoly::gen(Gen::letter(1));
    e21[m2.index(2, 1, 1)] = NCPoly::gen(Gen::letter(2));
    const BTensorElement prod = e12 * e21;
    CHECK(prod[m2.index(1, 1, 1)] == NCPoly::gen(Gen::letter(1)) * NCPoly::gen(Gen::letter(2)));
    CHECK(prod[m2.index(2, 2, 1)].is_zero());
    CHECK(e12.star()[m2.index(2, 1, 1)] == NCPoly::gen(Gen::letter(1).star()));
  }
}
