// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qaut/cli.hpp"
#include "qaut/coaction.hpp"
#include "qaut/hopf.hpp"
#include "qaut/models.hpp"

using namespace qaut;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> body;
};

// Matrix-unit indices (k, l, x) of a block space, enumerated directly.
std::size_t unit_count(const std::vector<int>& blocks) {
  std::size_t s = 0;
  for (int n : blocks)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) ++s;
  return s;
}

std::size_t tuples(std::size_t range, int arity) {
  std::size_t count = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
  for (;;) {
    ++count;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == range) idx[pos++] = 0;
    if (pos == idx.size()) return count;
  }
}

Outcome presentation_fidelity() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const Presentation p = magic_presentation(n);
    const auto nn = static_cast<std::size_t>(n);
    // (i, j) once for self-adjointness and once for idempotency.
    o.require(p.count("1") == 2 * tuples(nn, 2), "magic family 1");
    o.require(p.count("2") == tuples(nn, 1), "magic family 2");
    o.require(p.count("3") == tuples(nn, 1), "magic family 3");
  }
  for (int n = 1; n <= 3; ++n) {
    const Presentation p = aut_Mn_presentation(n);
    const auto nn = static_cast<std::size_t>(n);
    o.require(p.count("5") == tuples(nn, 6), "aut_M family 5");
    o.require(p.count("6") == tuples(nn, 6), "aut_M family 6");
    o.require(p.count("7") == tuples(nn, 4), "aut_M family 7");
    o.require(p.count("8") == tuples(nn, 2), "aut_M family 8");
    o.require(p.count("9") == tuples(nn, 2), "aut_M family 9");
  }
  o.require(aut_Mn_presentation(2).count("5") == 64, "family 5 at n=2 is 64");
  for (const std::vector<int>& blocks : std::vector<std::vector<int>>{{1, 2}, {1, 1, 1}, {2, 2}, {1, 3}}) {
    const Presentation p = aut_B_presentation(blocks);
    const std::size_t s = unit_count(blocks);
    o.require(p.count("11") == tuples(s, 3), "aut_B family 11");
    o.require(p.count("12") == tuples(s, 3), "aut_B family 12");
    o.require(p.count("13") == tuples(s, 2), "aut_B family 13");
    o.require(p.count("14") == tuples(s, 1), "aut_B family 14");
    o.require(p.count("15") == tuples(s, 1), "aut_B family 15");
  }
  return o;
}

std::vector<Presentation> hopf_targets() {
  return {magic_presentation(2), magic_presentation(3), magic_presentation(4), aut_Mn_presentation(2),
          aut_B_presentation({1, 2})};
}

Outcome hopf_suite() {
  Outcome o;
  for (Presentation p : hopf_targets()) {
    const std::string name = p.name;
    const HopfContext ctx(std::move(p));
    o.require(check_coproduct_well_defined(ctx).verdict == Verdict::Pass, name + " coproduct");
    o.require(check_coassociativity(ctx).verdict == Verdict::Pass, name + " coassociativity");
    o.require(check_counit(ctx).verdict == Verdict::Pass, name + " counit");
  }
  return o;
}

Outcome orthogonality() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const HopfContext ctx(magic_presentation(n));
    o.require(check_orthogonality(ctx).verdict == Verdict::Pass, "magic(" + std::to_string(n) + ")");
  }
  return o;
}

Outcome antipode() {
  Outcome o;
  for (Presentation p : {magic_presentation(2), magic_presentation(3), aut_Mn_presentation(2)}) {
    const std::string name = p.name;
    const StructureReport r = check_antipode(HopfContext(std::move(p)));
    o.require(r.verdict == Verdict::Pass, name + " " + to_string(r.verdict));
  }
  return o;
}

Outcome commutativity() {
  Outcome o;
  o.require(check_commutativity(HopfContext(magic_presentation(2))).verdict == Verdict::Pass, "n=2 must pass");

  const StructureReport n3 = check_commutativity(HopfContext(magic_presentation(3)));
  o.require(n3.verdict != Verdict::Fail, "n=3 reported fail");
  std::printf("      n=3 commutativity at degree_cap 8: %s\n", to_string(n3.verdict).c_str());

  const HopfContext m4(magic_presentation(4));
  const StructureReport n4 = check_commutativity(m4);
  o.require(n4.verdict != Verdict::Pass, "n=4 claimed commutative");
  const NCPoly c = commutator(NCPoly::gen(Gen::x(1, 1)), NCPoly::gen(Gen::x(3, 3)));
  const MembershipVerdict m = ideal_member(c, m4.single());
  o.require(m.verdict != Membership::InIdeal, "[a11,a33] InIdeal");
  std::printf("      n=4 commutativity: %s, [a11,a33]: %s\n", to_string(n4.verdict).c_str(),
              to_string(m.verdict).c_str());
  return o;
}

Outcome coaction_suite() {
  Outcome o;
  const std::vector<SpaceSpec> specs = {SpaceSpec::points(2), SpaceSpec::points(3), SpaceSpec::points(4),
                                        SpaceSpec::matrices(2), SpaceSpec::block_list({1, 2})};
  for (const SpaceSpec& spec : specs) {
    const FiniteSpace space = spec.space();
    const HopfContext ctx(aut_presentation(spec));
    const std::string name = spec.str();
    o.require(check_homomorphism(space, ctx).verdict == Verdict::Pass, name + " homomorphism");
    o.require(check_star(space, ctx).verdict == Verdict::Pass, name + " star");
    o.require(check_unital(space, ctx).verdict == Verdict::Pass, name + " unital");
    o.require(check_coaction_square(space, ctx).verdict == Verdict::Pass, name + " square");
    o.require(check_counit_action(space, ctx).verdict == Verdict::Pass, name + " counit");
    o.require(check_invariant_functional(space, ctx, space.psi_weights()).verdict == Verdict::Pass,
              name + " invariance");
  }
  return o;
}

Outcome noncommutativity_witness() {
  Outcome o;
  const NumericRep rep = two_projection_rep(M_PI / 4);
  const NumericReport r = numeric_verify(magic_presentation(4), rep);
  o.require(r.max_residual <= 1e-12, "residual " + std::to_string(r.max_residual));
  const CMatrix a = rep.images.at(Gen::x(1, 1)), b = rep.images.at(Gen::x(3, 3));
  const double norm = operator_norm(a * b - b * a);
  o.require(std::abs(norm - 0.5) <= 1e-9, "commutator norm " + std::to_string(norm));
  return o;
}

Outcome classical_points() {
  Outcome o;
  const std::size_t expected[] = {0, 0, 2, 6, 24};
  for (int n = 2; n <= 4; ++n) {
    const Presentation p = magic_presentation(n);
    const std::vector<Character> chars = enumerate_characters_magic(n);
    o.require(chars.size() == expected[n], "count at n=" + std::to_string(n));
    for (const Character& chi : chars)
      o.require(check_character(p, chi).verdict == Verdict::Pass, "character fails at n=" + std::to_string(n));
  }
  return o;
}

Outcome embeddings() {
  Outcome o;
  const Presentation b12 = aut_B_presentation({1, 2});
  for (int k0 = 1; k0 <= 2; ++k0) {
    const RewriteSystem target = build_system(aut_Mn_presentation(k0));
    o.require(check_morphism(b12, target, block_to_matrix_morphism({1, 2}, k0)).verdict == Verdict::Pass,
              "blocks(1,2) -> aut_M(" + std::to_string(k0) + ")");
  }
  o.require(check_morphism(aut_B_presentation({2, 2}), build_system(magic_presentation(2)),
                           block_to_points_morphism(2, 2))
                    .verdict == Verdict::Pass,
            "blocks(2,2) -> magic(2)");
  o.require(check_morphism(aut_Mn_presentation(2), build_system(au_presentation(2)), matrix_to_au_morphism(2))
                    .verdict == Verdict::Pass,
            "aut_M(2) -> A_u(2)");
  return o;
}

Outcome appendix() {
  Outcome o;
  for (int dim : {3, 4}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const AppendixReport r = appendix_q_checks(random_positive(dim, seed), random_positive(4, seed + 1000), 2, seed);
      o.require(r.twisted_residual <= 1e-9 && r.unitary_residual <= 1e-9,
                "v equivalence dim " + std::to_string(dim) + " seed " + std::to_string(seed));
      o.require(r.p_inverse_residual <= 1e-9, "P P~ seed " + std::to_string(seed));
    }
  }
  return o;
}

Outcome discrepancy() {
  Outcome o;
  const ClassicalPoints x2 =
      classical_point_discrepancy(2, QMatrix::identity(2), QMatrix::diagonal({GaussQ(1), GaussQ(2)}));
  o.require(x2.distinct, "X_2 not distinct");
  o.require(x2.first == std::vector<Permutation>{{1, 2}, {2, 1}}, "X_2 first set");
  o.require(x2.second == std::vector<Permutation>{{1, 2}}, "X_2 second set");
  const ClassicalPoints x3 =
      classical_point_discrepancy(3, QMatrix::identity(3), QMatrix::diagonal({GaussQ(1), GaussQ(1), GaussQ(2)}));
  o.require(x3.distinct, "X_3 not distinct");
  o.require(x3.first.size() == 6, "X_3 first set");
  o.require(x3.second == std::vector<Permutation>{{1, 2, 3}, {2, 1, 3}}, "X_3 second set");
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const char* dsl : {"space X(3); variant aut;", "space blocks(1,2); variant aut;"}) {
    RunConfig cfg;
    cfg.command = "full-report";
    cfg.dsl = dsl;
    cfg.seed = 11;
    const std::string a = run(cfg).to_json().dump(2);
    const std::string b = run(cfg).to_json().dump(2);
    o.require(a == b, std::string("differs for ") + dsl);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "presentation fidelity", 1, presentation_fidelity},
      {2, "Hopf suite", 300, hopf_suite},
      {3, "orthogonality derivation", 120, orthogonality},
      {4, "antipode law", 300, antipode},
      {5, "commutativity probe", 300, commutativity},
      {6, "coaction suite", 180, coaction_suite},
      {7, "noncommutativity witness", 60, noncommutativity_witness},
      {8, "classical points", 5, classical_points},
      {9, "embeddings and A_u model", 300, embeddings},
      {10, "appendix checks", 10, appendix},
      {11, "classical point discrepancy", 1, discrepancy},
      {12, "determinism", 300, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_s) o.require(false, "over time limit");
    if (!o.pass) ++failures;
    std::printf("%s  %2d  %-30s %8.3fs / %gs%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
