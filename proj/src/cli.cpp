#include "qaut/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "qaut/coaction.hpp"
#include "qaut/dsl.hpp"
#include "qaut/hopf.hpp"
#include "qaut/models.hpp"
#include "qaut/presentations.hpp"

#ifndef QAUT_VERSION
#define QAUT_VERSION "0.0.0"
#endif

namespace qaut {

using nlohmann::json;

std::string tool_version() { return QAUT_VERSION; }

Verdict Report::overall() const {
  Verdict v = Verdict::Pass;
  for (const ReportEntry& e : entries) {
    if (e.required) v = combine(v, e.report.verdict);
  }
  return v;
}

int Report::exit_code() const {
  switch (overall()) {
    case Verdict::Pass:
      return 0;
    case Verdict::Fail:
      return 2;
    case Verdict::Inconclusive:
      return 3;
  }
  return 2;
}

const ReportEntry* Report::find(const std::string& check) const {
  for (const ReportEntry& e : entries) {
    if (e.report.check == check) return &e;
  }
  return nullptr;
}

json Report::to_json() const {
  json out;
  out["tool"] = "qaut";
  out["version"] = tool_version();
  out["schema_version"] = kReportSchemaVersion;
  out["config"] = config;
  out["presentation"] = presentation;
  out["system"] = system;
  out["notes"] = notes;
  json list = json::array();
  for (const ReportEntry& e : entries) {
    const StructureReport& r = e.report;
    json j;
    j["check"] = r.check;
    j["verdict"] = to_string(r.verdict);
    j["required"] = e.required;
    j["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
    j["witness_label"] = r.witness_label;
    j["identities"] = r.identities;
    j["rules_used"] = r.rules_used;
    j["system_status"] = r.system_status;
    j["details"] = r.details;
    j["values"] = e.values;
    if (timings) j["elapsed_ms"] = e.elapsed_ms;
    list.push_back(std::move(j));
  }
  out["entries"] = std::move(list);
  out["overall"] = to_string(overall());
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check-hopf", "check-coaction",   "classical-points",
                                                 "rep-demo",   "appendix-checks", "embeddings",
                                                 "full-report"};
  return names;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json qmatrix_json(const QMatrix& q) {
  json rows = json::array();
  for (std::size_t i = 0; i < q.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < q.dim(); ++j) row.push_back(q(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix to_cmatrix(const QMatrix& q) {
  const auto n = static_cast<Eigen::Index>(q.dim());
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = q(i, j).to_complex();
  return out;
}

json trace_line(const RewriteRule& r) {
  json rhs = json::array();
  for (const Term& t : r.rhs.terms()) rhs.push_back({{"word", t.word.str()}, {"coeff", t.coeff.str()}});
  return {{"id", r.id},         {"lhs", r.lhs.str()},         {"rhs", rhs},
          {"parents", r.parents}, {"degree", r.lhs.degree()}, {"origin", to_string(r.origin)}};
}

StructureReport numeric_report(std::string check, bool pass, std::string details) {
  StructureReport r;
  r.check = std::move(check);
  r.verdict = pass ? Verdict::Pass : Verdict::Fail;
  r.system_status = "numeric";
  r.details = std::move(details);
  return r;
}

StructureReport note_report(std::string check, Verdict v, std::string details) {
  StructureReport r;
  r.check = std::move(check);
  r.verdict = v;
  r.system_status = "exact";
  r.details = std::move(details);
  return r;
}

json permutations_json(const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const Permutation& p : perms) out.push_back(p);
  return out;
}

double max_commutator(const NumericRep& rep) {
  double worst = 0.0;
  for (auto a = rep.images.begin(); a != rep.images.end(); ++a)
    for (auto b = std::next(a); b != rep.images.end(); ++b) {
      worst = std::max(worst, operator_norm(a->second * b->second - b->second * a->second));
    }
  return worst;
}

// Extends a representation of magic(from) to magic(n) by fixing the extra points.
NumericRep extend_magic_rep(const NumericRep& rep, int from, int n) {
  NumericRep out = rep;
  const auto d = static_cast<Eigen::Index>(rep.dim);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i <= from && j <= from) continue;
      out.images[Gen::x(i, j)] = i == j ? CMatrix(CMatrix::Identity(d, d)) : CMatrix(CMatrix::Zero(d, d));
    }
  return out;
}

class Session {
 public:
  Session(const RunConfig& cfg, Report& report) : cfg_(cfg), report_(report) {
    const std::string text = cfg.dsl.empty() ? read_file(cfg.input_path) : cfg.dsl;
    spec_ = parse_dsl(text);
    pres_ = build_presentation(spec_);
    report_.timings = cfg.timings;
    report_.config = {{"command", cfg.command},
                      {"input", cfg.dsl.empty() ? cfg.input_path : std::string("<inline>")},
                      {"degree_cap", cfg.limits.degree_cap},
                      {"rule_cap", cfg.limits.rule_cap},
                      {"tolerance", cfg.tolerance},
                      {"seed", cfg.seed}};
    json families = json::object();
    for (const std::string& f : pres_.families()) families[f] = pres_.count(f);
    report_.presentation = {{"name", pres_.name},
                            {"space", spec_.space.str()},
                            {"variant", to_string(spec_.variant)},
                            {"dim", pres_.dim},
                            {"generators", pres_.generators.size()},
                            {"relations", pres_.relations.size()},
                            {"families", families},
                            {"kac", pres_.kac},
                            {"q", spec_.q ? qmatrix_json(*spec_.q) : json(nullptr)}};
    report_.system = json::object();
  }

  const RunConfig& cfg() const { return cfg_; }
  const PresentationSpec& spec() const { return spec_; }
  const Presentation& pres() const { return pres_; }
  Report& report() { return report_; }

  const HopfContext& hopf() {
    if (!ctx_) {
      const Clock::time_point start = Clock::now();
      TraceSink sink;
      std::ofstream trace;
      if (!cfg_.trace_path.empty()) {
        trace.open(cfg_.trace_path);
        if (!trace) throw UsageError("cannot write trace file " + cfg_.trace_path);
        sink = [&trace](const RewriteRule& r) {
          if (r.origin == RuleOrigin::CriticalPair || r.origin == RuleOrigin::Positivity) {
            trace << trace_line(r).dump() << '\n';
          }
        };
      }
      ctx_.emplace(pres_, cfg_.limits, sink);
      const RewriteSystem& s = ctx_->single();
      report_.system = {{"rules", s.rules().size()},
                        {"status", to_string(s.status())},
                        {"exhaustive", s.exhaustive()},
                        {"trivial", s.trivial()},
                        {"max_rule_degree", s.max_rule_degree()},
                        {"pairs_considered", s.stats().pairs_considered},
                        {"positivity_families_used", s.stats().positivity_families_used}};
      if (cfg_.timings) report_.system["elapsed_ms"] = ms_since(start);
    }
    return *ctx_;
  }

  void add(bool required, const std::function<StructureReport(json&)>& f) {
    const Clock::time_point start = Clock::now();
    ReportEntry e;
    e.required = required;
    e.report = f(e.values);
    e.elapsed_ms = ms_since(start);
    report_.entries.push_back(std::move(e));
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  std::uint64_t seed(std::uint64_t salt) const { return cfg_.seed * 1000003ULL + salt; }

 private:
  const RunConfig& cfg_;
  Report& report_;
  PresentationSpec spec_;
  Presentation pres_;
  std::optional<HopfContext> ctx_;
};

bool is_points_aut(const Presentation& p) { return p.kind == SpaceKind::Points && p.variant == Variant::Aut; }

void hopf_section(Session& s) {
  const HopfContext& ctx = s.hopf();
  const Presentation& p = s.pres();
  s.add(true, [&](json&) { return check_coproduct_well_defined(ctx); });
  s.add(true, [&](json&) { return check_coassociativity(ctx); });
  s.add(true, [&](json&) { return check_counit(ctx); });
  s.add(true, [&](json&) { return check_antipode(ctx); });
  s.add(p.kac, [&](json&) { return check_kac_unitarity(ctx); });
  const bool magic_like = p.kind == SpaceKind::Points && (!p.q || p.q->is_identity());
  if (magic_like || p.variant == Variant::AoOld) {
    s.add(true, [&](json&) { return check_orthogonality(ctx); });
  }
  // Commutativity is claimed for the quantum permutation groups up to 3 points.
  const bool commutative_claim = is_points_aut(p) && p.dim <= 3;
  s.add(commutative_claim, [&](json& v) {
    StructureReport r = check_commutativity(ctx);
    v["expected"] = commutative_claim ? "pass" : "not claimed";
    return r;
  });
}

void coaction_section(Session& s) {
  const auto space = s.pres().space();
  if (!space) {
    s.note("coaction checks skipped: " + to_string(s.pres().variant) + " does not act on a finite space");
    return;
  }
  const HopfContext& ctx = s.hopf();
  s.add(true, [&](json&) { return check_homomorphism(*space, ctx); });
  s.add(true, [&](json&) { return check_star(*space, ctx); });
  s.add(true, [&](json&) { return check_unital(*space, ctx); });
  s.add(true, [&](json&) { return check_coaction_square(*space, ctx); });
  s.add(true, [&](json&) { return check_counit_action(*space, ctx); });
  // The trace functional is invariant for the untwisted variant only.
  const bool untwisted = s.pres().variant == Variant::Aut;
  s.add(untwisted, [&](json& v) {
    std::vector<GaussQ> w = space->psi_weights();
    json weights = json::array();
    for (const GaussQ& x : w) weights.push_back(x.str());
    v["weights"] = weights;
    return check_invariant_functional(*space, ctx, w);
  });
  s.add(true, [&](json&) { return check_generator_span(*space, ctx); });
}

void classical_section(Session& s) {
  const Presentation& p = s.pres();
  const int n = static_cast<int>(p.dim);
  if (p.kind == SpaceKind::Points) {
    s.add(true, [&](json& v) {
      try {
        std::vector<Character> chars = p.q ? characters_magic_q(n, *p.q) : enumerate_characters_magic(n);
        StructureReport r = note_report("classical.characters", Verdict::Pass,
                                        "permutation characters passing exact relation evaluation");
        std::vector<Permutation> perms;
        for (const Character& chi : chars) {
          const StructureReport c = check_character(p, chi);
          r.verdict = combine(r.verdict, c.verdict);
          perms.push_back(character_permutation(chi, n));
        }
        r.identities = p.relations.size() * chars.size();
        v["count"] = perms.size();
        v["points"] = permutations_json(perms);
        return r;
      } catch (const CapExceeded& e) {
        return note_report("classical.characters", Verdict::Inconclusive, e.what());
      } catch (const std::invalid_argument& e) {
        return note_report("classical.characters", Verdict::Inconclusive, e.what());
      }
    });
    if (p.q && !p.q->is_identity()) {
      s.add(false, [&](json& v) {
        try {
          const ClassicalPoints cp = classical_point_discrepancy(n, QMatrix::identity(p.dim), *p.q);
          v["points_identity"] = permutations_json(cp.first);
          v["points_q"] = permutations_json(cp.second);
          v["distinct"] = cp.distinct;
          return note_report("classical.discrepancy", Verdict::Pass,
                             cp.distinct ? "classical points differ from Q = I" : "same classical points as Q = I");
        } catch (const std::invalid_argument& e) {
          return note_report("classical.discrepancy", Verdict::Inconclusive, e.what());
        }
      });
    }
    return;
  }
  if (p.kind == SpaceKind::Matrices) {
    s.add(p.variant == Variant::Aut, [&](json& v) {
      const std::size_t d = p.dim == 0 ? 0 : static_cast<std::size_t>(std::lround(std::sqrt(p.dim)));
      std::vector<GaussQ> shift(d * d), phase(d * d);
      GaussQ ik(1);
      for (std::size_t i = 0; i < d; ++i) {
        shift[((i + 1) % d) * d + i] = GaussQ(1);
        phase[i * d + i] = ik;
        ik *= GaussQ::i();
      }
      const QMatrix s_m(d, shift), p_m(d, phase);
      const std::vector<std::pair<std::string, QMatrix>> unitaries = {
          {"identity", QMatrix::identity(d)}, {"shift", s_m}, {"phase", p_m}, {"shift*phase", s_m * p_m}};
      StructureReport r = note_report("classical.inner_characters", Verdict::Pass,
                                      "Ad_w for exact monomial unitaries w, checked as *-automorphisms");
      json names = json::array();
      for (const auto& [name, w] : unitaries) {
        const StructureReport c = check_character(p, inner_character(w));
        if (c.verdict != Verdict::Pass && r.verdict == Verdict::Pass) {
          r.witness_label = name + ": " + c.witness_label;
          r.witness = c.witness;
        }
        r.verdict = combine(r.verdict, c.verdict);
        names.push_back(name);
      }
      v["unitaries"] = names;
      return r;
    });
    return;
  }
  s.note("classical-points: no enumeration for " + s.spec().space.str() + " with variant " +
         to_string(p.variant));
}

void rep_section(Session& s) {
  const Presentation& p = s.pres();
  const double tol = s.cfg().tolerance;
  const int n = static_cast<int>(p.dim);
  if (is_points_aut(p) && n >= 4) {
    const double theta = M_PI / 4;
    const NumericRep rep = extend_magic_rep(two_projection_rep(theta), 4, n);
    s.add(true, [&](json& v) {
      const NumericReport nr = numeric_verify(p, rep);
      v["theta"] = theta;
      v["max_residual"] = nr.max_residual;
      v["threshold"] = 1e-12;
      StructureReport r = numeric_report("models.two_projection.relations", nr.max_residual <= 1e-12,
                                         "relation residuals on C^2");
      r.identities = nr.checked;
      v["worst"] = nr.worst;
      return r;
    });
    s.add(true, [&](json& v) {
      const CMatrix a = rep.images.at(Gen::x(1, 1));
      const CMatrix b = rep.images.at(Gen::x(3, 3));
      const double norm = operator_norm(a * b - b * a);
      v["commutator_norm"] = norm;
      v["expected"] = 0.5;
      return numeric_report("models.two_projection.commutator", std::abs(norm - 0.5) <= tol,
                            "||[a11, a33]|| in the two-projection representation");
    });
    s.add(true, [&](json& v) {
      const HopfContext& ctx = s.hopf();
      const NCPoly c = NCPoly::gen(Gen::x(1, 1)) * NCPoly::gen(Gen::x(3, 3)) -
                       NCPoly::gen(Gen::x(3, 3)) * NCPoly::gen(Gen::x(1, 1));
      const MembershipVerdict m = ideal_member(c, ctx.single());
      v["membership"] = to_string(m.verdict);
      StructureReport r = note_report("models.soundness", m.verdict == Membership::InIdeal ? Verdict::Fail : Verdict::Pass,
                                      "[a11, a33] must not be derivable");
      r.system_status = to_string(ctx.single().status());
      if (!m.normal_form.is_zero()) r.witness = m.normal_form;
      r.witness_label = "[a11,a33]";
      return r;
    });
    return;
  }
  if (p.kind == SpaceKind::Points && (p.variant == Variant::Aut || p.variant == Variant::QAut)) {
    s.add(true, [&](json& v) {
      std::vector<Character> chars;
      try {
        chars = p.q ? characters_magic_q(n, *p.q) : enumerate_characters_magic(n);
      } catch (const std::invalid_argument& e) {
        return note_report("models.character_reps", Verdict::Inconclusive, e.what());
      }
      double worst = 0.0;
      for (const Character& chi : chars) worst = std::max(worst, numeric_verify(p, character_rep(chi)).max_residual);
      v["representations"] = chars.size();
      v["max_residual"] = worst;
      return numeric_report("models.character_reps", worst <= tol, "characters as one-dimensional representations");
    });
    return;
  }
  if (p.kind == SpaceKind::Matrices && p.variant == Variant::Aut) {
    const int d = static_cast<int>(std::lround(std::sqrt(p.dim)));
    s.add(true, [&](json& v) {
      const NumericReport nr = numeric_verify(p, au_model_rep(random_unitary(d, s.seed(1)), tol));
      v["max_residual"] = nr.max_residual;
      StructureReport r = numeric_report("models.inner_rep", nr.max_residual <= tol, "a^{kl}_{ij} -> w_ki conj(w_lj)");
      r.identities = nr.checked;
      return r;
    });
    s.add(true, [&](json& v) {
      std::vector<CMatrix> diag;
      for (int j = 0; j < d; ++j) diag.push_back(random_unitary(3, s.seed(10 + static_cast<std::uint64_t>(j))));
      const NumericRep au = au_twisted_rep(random_unitary(d, s.seed(2)), diag);
      const NumericRep rep = pull_back(au, matrix_to_au_morphism(d));
      const NumericReport nr = numeric_verify(p, rep);
      v["max_residual"] = nr.max_residual;
      v["max_commutator"] = max_commutator(rep);
      StructureReport r = numeric_report("models.au_pullback", nr.max_residual <= tol,
                                         "twisted A_u representation pulled back along a -> u u^*");
      r.identities = nr.checked;
      return r;
    });
    return;
  }
  if (p.variant == Variant::Au) {
    s.add(true, [&](json& v) {
      std::vector<CMatrix> diag;
      for (int j = 0; j < n; ++j) diag.push_back(random_unitary(3, s.seed(20 + static_cast<std::uint64_t>(j))));
      const NumericRep rep = au_twisted_rep(random_unitary(n, s.seed(3)), diag);
      const NumericReport nr = numeric_verify(p, rep);
      v["max_residual"] = nr.max_residual;
      v["max_commutator"] = max_commutator(rep);
      StructureReport r = numeric_report("models.au_twisted", nr.max_residual <= tol, "u_ij = w_ij D_j on C^3");
      r.identities = nr.checked;
      return r;
    });
    return;
  }
  s.note("rep-demo: no numeric model for " + s.spec().space.str() + " with variant " + to_string(p.variant));
}

void appendix_section(Session& s) {
  const double tol = s.cfg().tolerance;
  for (int dim : {3, 4}) {
    s.add(true, [&, dim](json& v) {
      double twisted = 0, unitary = 0, p_inv = 0;
      double broken = std::numeric_limits<double>::infinity();
      bool pass = true;
      for (std::uint64_t k = 0; k < 10; ++k) {
        const std::uint64_t seed = s.seed(100 + 10 * static_cast<std::uint64_t>(dim) + k);
        const CMatrix q = random_positive(dim, seed);
        // dim 4 reuses Q on C^2 (x) C^2; dim 3 draws a separate Q on C^3 (x) C^3.
        const int n = dim == 4 ? 2 : 3;
        const CMatrix q_nn = dim == 4 ? q : random_positive(9, seed + 7);
        const AppendixReport a = appendix_q_checks(q, q_nn, n, seed, tol);
        twisted = std::max(twisted, a.twisted_residual);
        unitary = std::max(unitary, a.unitary_residual);
        p_inv = std::max(p_inv, a.p_inverse_residual);
        broken = std::min({broken, a.broken_twisted_residual, a.broken_unitary_residual});
        pass = pass && a.pass;
      }
      v["samples"] = 10;
      v["max_twisted_residual"] = twisted;
      v["max_unitary_residual"] = unitary;
      v["max_p_inverse_residual"] = p_inv;
      v["min_broken_residual"] = broken;
      return numeric_report("appendix.random_q.dim" + std::to_string(dim), pass,
                            "v = Q^{1/2} u Q^{-1/2} equivalence and P P~ = I for seeded random Q");
    });
  }
  s.add(false, [&](json& v) {
    const CMatrix q = random_positive(4, s.seed(200));
    const AppendixReport a = appendix_q_checks(q, q, 2, s.seed(200), tol);
    v["literal_p_inverse_residual"] = a.literal_p_inverse_residual;
    return numeric_report("appendix.literal_p_tilde", a.literal_p_inverse_residual <= tol,
                          "P~ built from the entries of Q instead of Q^{-1}");
  });
  const Presentation& p = s.pres();
  if (p.q && (p.variant == Variant::AoNew || p.variant == Variant::AoOld || p.variant == Variant::QAut)) {
    s.add(true, [&](json& v) {
      const CMatrix q = to_cmatrix(*p.q);
      const int m = static_cast<int>(q.rows());
      const CMatrix q_nn = random_positive(m * m, s.seed(300));
      const AppendixReport a = appendix_q_checks(q, q_nn, m, s.seed(301), tol);
      v["twisted_residual"] = a.twisted_residual;
      v["unitary_residual"] = a.unitary_residual;
      v["p_inverse_residual"] = a.p_inverse_residual;
      return numeric_report("appendix.given_q", a.pass, "equivalence for the declared Q");
    });
  }
}

void embeddings_section(Session& s) {
  const Presentation& p = s.pres();
  const CompletionLimits lim = s.cfg().limits;
  if (p.variant != Variant::Aut) {
    s.note("embeddings: only the untwisted variants carry the embedding maps");
    return;
  }
  if (p.kind == SpaceKind::Blocks) {
    const std::vector<int>& blocks = p.blocks;
    for (int k0 = 1; k0 <= static_cast<int>(blocks.size()); ++k0) {
      const int nk = blocks[static_cast<std::size_t>(k0 - 1)];
      const RewriteSystem dst = build_system(aut_Mn_presentation(nk), lim);
      const std::string tag = "k0=" + std::to_string(k0);
      s.add(true, [&](json& v) {
        v["target"] = "aut_M(" + std::to_string(nk) + ")";
        return check_morphism(p, dst, block_to_matrix_morphism(blocks, k0), "embedding.block_to_matrix." + tag);
      });
      if (blocks.size() > 1) {
        s.add(false, [&](json& v) {
          v["target"] = "aut_M(" + std::to_string(nk) + ")";
          return check_morphism(p, dst, block_to_matrix_morphism_literal(blocks, k0),
                                "embedding.block_to_matrix_literal." + tag);
        });
      }
    }
    if (std::all_of(blocks.begin(), blocks.end(), [&](int b) { return b == blocks.front(); })) {
      const int m = static_cast<int>(blocks.size());
      s.add(true, [&](json& v) {
        v["target"] = "magic(" + std::to_string(m) + ")";
        const RewriteSystem dst = build_system(magic_presentation(m), lim);
        return check_morphism(p, dst, block_to_points_morphism(m, blocks.front()), "embedding.block_to_points");
      });
    }
    return;
  }
  if (p.kind == SpaceKind::Matrices) {
    const int d = static_cast<int>(std::lround(std::sqrt(p.dim)));
    s.add(true, [&](json& v) {
      v["target"] = "a_u(" + std::to_string(d) + ")";
      const RewriteSystem dst = build_system(au_presentation(d), lim);
      return check_morphism(p, dst, matrix_to_au_morphism(d), "embedding.matrix_to_au");
    });
    return;
  }
  if (p.kind == SpaceKind::Points) {
    const int m = static_cast<int>(p.dim);
    s.add(true, [&](json& v) {
      v["source"] = "aut_B(1^" + std::to_string(m) + ")";
      const HopfContext& ctx = s.hopf();
      return check_morphism(aut_B_presentation(std::vector<int>(static_cast<std::size_t>(m), 1)), ctx.single(),
                            block_to_points_morphism(m, 1), "embedding.points_as_blocks");
    });
    return;
  }
  s.note("embeddings: nothing to check for this presentation");
}

}  // namespace

Report run(const RunConfig& cfg) {
  static const std::map<std::string, std::function<void(Session&)>> commands = {
      {"check-hopf", hopf_section},
      {"check-coaction", coaction_section},
      {"classical-points", classical_section},
      {"rep-demo", rep_section},
      {"appendix-checks", appendix_section},
      {"embeddings", embeddings_section},
      {"full-report",
       [](Session& s) {
         s.hopf();
         hopf_section(s);
         coaction_section(s);
         classical_section(s);
         rep_section(s);
         embeddings_section(s);
         appendix_section(s);
       }},
  };
  const auto it = commands.find(cfg.command);
  if (it == commands.end()) throw UsageError("unknown command '" + cfg.command + "'");
  if (cfg.dsl.empty() && cfg.input_path.empty()) throw UsageError("no input: give a DSL file or --dsl");
  if (cfg.limits.degree_cap == 0 || cfg.limits.rule_cap == 0) throw UsageError("budgets must be positive");
  if (!(cfg.tolerance > 0.0)) throw UsageError("tolerance must be positive");
  Report report;
  Session session(cfg, report);
  it->second(session);
  return report;
}

}  // namespace qaut
