#include <doctest.h>

#include "qaut/hopf.hpp"
#include "qaut/models.hpp"
#include "support.hpp"

// Everything the rewriting side derives must vanish in every numeric model.

using namespace qaut;

namespace {

double worst_rule(const RewriteSystem& sys, const NumericRep& rep) {
  double worst = 0.0;
  for (const RewriteRule& r : sys.rules()) worst = std::max(worst, operator_norm(evaluate(r.relation(), rep)));
  return worst;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// rho (x) rho on the doubled algebra.
NumericRep doubled(const NumericRep& rep) {
  NumericRep out;
  out.dim = rep.dim * rep.dim;
  const auto d = static_cast<Eigen::Index>(rep.dim);
  const CMatrix id = CMatrix::Identity(d, d);
  for (const auto& [g, m] : rep.images) {
    out.images[g.on_leg(1)] = kron(m, id);
    out.images[g.on_leg(2)] = kron(id, m);
  }
  return out;
}

std::vector<NumericRep> aut_m2_models() {
  std::vector<NumericRep> out;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    out.push_back(au_model_rep(random_unitary(2, seed)));
    const NumericRep au = au_twisted_rep(random_unitary(2, seed + 5), {random_unitary(3, seed + 7), random_unitary(3, seed + 9)});
    out.push_back(pull_back(au, matrix_to_au_morphism(2)));
  }
  return out;
}

}  // namespace

TEST_SUITE("soundness") {
  TEST_CASE("derived rules of magic(4) vanish in every model") {
    const RewriteSystem sys = build_system(magic_presentation(4));
    qaut::testing::Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
      CHECK(worst_rule(sys, two_projection_rep(rng.real(0.01, 1.56))) <= 1e-9);
    }
    for (const Character& chi : enumerate_characters_magic(4)) CHECK(worst_rule(sys, character_rep(chi)) <= 1e-9);
  }

  TEST_CASE("derived rules of aut_M(2) and A_u(2) vanish in every model") {
    const RewriteSystem am = build_system(aut_Mn_presentation(2));
    for (const NumericRep& rep : aut_m2_models()) CHECK(worst_rule(am, rep) <= 1e-9);
    const RewriteSystem au = build_system(au_presentation(2));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const NumericRep rep = au_twisted_rep(random_unitary(2, seed), {random_unitary(2, seed + 3), random_unitary(2, seed + 4)});
      CHECK(worst_rule(au, rep) <= 1e-9);
    }
  }

  TEST_CASE("derived rules of a twisted presentation vanish on its characters") {
    const QMatrix q = QMatrix::diagonal({GaussQ(1), GaussQ(1), GaussQ(2)});
    const RewriteSystem sys = build_system(q_aut_presentation(SpaceSpec::points(3), q));
    for (const Character& chi : characters_magic_q(3, q)) CHECK(worst_rule(sys, character_rep(chi)) <= 1e-9);
  }

  TEST_CASE("ideal members vanish numerically") {
    const Presentation p = magic_presentation(4);
    const RewriteSystem sys = build_system(p);
    const NumericRep rep = two_projection_rep(0.4);
    qaut::testing::Rng rng(72);
    const std::vector<Gen> letters = qaut::testing::with_stars(p.generators);
    for (int trial = 0; trial < 60; ++trial) {
      // Two-sided combinations of relations.
      NCPoly x;
      for (int k = 0; k < 3; ++k) {
        const Relation& r = p.relations[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(p.relations.size()) - 1))];
        x += NCPoly::monomial(rng.word(letters, 2), rng.nonzero_scalar()) * r.poly * NCPoly::monomial(rng.word(letters, 2), GaussQ(1));
      }
      CHECK(ideal_member(x, sys).verdict == Membership::InIdeal);
      CHECK(operator_norm(evaluate(x, rep)) <= 1e-9);
      const NCPoly y = rng.poly(letters, 3, 3);
      // y - nf(y) is always in the ideal.
      CHECK(operator_norm(evaluate(y - sys.reduce(y), rep)) <= 1e-9);
    }
    CHECK(operator_norm(evaluate(commutator(NCPoly::gen(Gen::x(1, 1)), NCPoly::gen(Gen::x(3, 3))), rep)) > 0.1);
  }

  TEST_CASE("passing Hopf identities hold in tensor-square models") {
    const Presentation p = magic_presentation(4);
    const NumericRep rep = two_projection_rep(0.9);
    const NumericRep rr = doubled(rep);
    for (const Relation& r : p.relations) CHECK(operator_norm(evaluate(substitute(r.poly, p.coproduct), rr)) <= 1e-9);

    const Presentation am = aut_Mn_presentation(2);
    for (const NumericRep& m : aut_m2_models()) {
      const NumericRep mm = doubled(m);
      for (const Relation& r : am.relations) CHECK(operator_norm(evaluate(substitute(r.poly, am.coproduct), mm)) <= 1e-9);
      // Antipode law: sum_c kappa(u_ac) u_cb = delta_ab.
      for (std::size_t a = 0; a < am.dim; ++a)
        for (std::size_t b = 0; b < am.dim; ++b) {
          NCPoly lhs;
          for (std::size_t c = 0; c < am.dim; ++c) lhs += am.antipode.at(am.entry(a, c)) * NCPoly::gen(am.entry(c, b));
          if (a == b) lhs -= NCPoly::one();
          CHECK(operator_norm(evaluate(lhs, m)) <= 1e-9);
        }
    }
  }
}
