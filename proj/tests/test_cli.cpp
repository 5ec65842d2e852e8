#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qaut/cli.hpp"
#include "qaut/dsl.hpp"
#include "support.hpp"

using namespace qaut;

namespace {

std::vector<std::string> relation_strings(const Presentation& p) {
  std::vector<std::string> out;
  for (const Relation& r : p.relations) out.push_back(r.family + ":" + r.poly.str());
  return out;
}

Report run_inline(const std::string& command, const std::string& dsl, std::uint64_t seed = 1) {
  RunConfig cfg;
  cfg.command = command;
  cfg.dsl = dsl;
  cfg.seed = seed;
  return run(cfg);
}

ReportEntry entry(Verdict v, bool required) {
  ReportEntry e;
  e.report.check = "synthetic";
  e.report.verdict = v;
  e.required = required;
  return e;
}

void require_parse_error(const std::string& text, int line, int column) {
  INFO(text);
  try {
    parse_dsl(text);
    FAIL("no ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("DSL examples build the expected presentations") {
    CHECK(relation_strings(build_presentation(parse_dsl("space X(4); variant aut;"))) ==
          relation_strings(magic_presentation(4)));
    CHECK(relation_strings(build_presentation(parse_dsl("space M(2); variant aut;"))) ==
          relation_strings(aut_Mn_presentation(2)));
    CHECK(relation_strings(build_presentation(parse_dsl("space blocks(1,2); variant aut;"))) ==
          relation_strings(aut_B_presentation({1, 2})));

    const PresentationSpec spec = parse_dsl("space blocks(1,2); variant q_aut; Q diag(1,1,2,2,3);");
    CHECK(spec.variant == Variant::QAut);
    REQUIRE(spec.q.has_value());
    CHECK(*spec.q == QMatrix::diagonal({GaussQ(1), GaussQ(1), GaussQ(2), GaussQ(2), GaussQ(3)}));
    CHECK(relation_strings(build_presentation(spec)) ==
          relation_strings(q_aut_presentation(SpaceSpec::block_list({1, 2}), *spec.q)));
  }

  TEST_CASE("DSL surface syntax") {
    const PresentationSpec multi = parse_dsl(
        "# two points, twisted\n"
        "space = X(2)\n"
        "variant a_o_new\n"
        "Q matrix [[2, i], [-i, 2]]\n");
    CHECK(multi.space.blocks == std::vector<int>{1, 1});
    CHECK(multi.variant == Variant::AoNew);
    CHECK((*multi.q)(0, 1) == GaussQ::i());
    CHECK((*multi.q)(1, 0) == -GaussQ::i());

    const PresentationSpec id = parse_dsl("space M(2); variant q_aut; Q identity;");
    CHECK(*id.q == QMatrix::identity(4));
    CHECK(fundamental_dim(id) == 4);
    CHECK(parse_dsl("space X(3);").variant == Variant::Aut);
    CHECK(parse_dsl("space X(2); variant a_u;").variant == Variant::Au);

    CHECK(parse_scalar("1-2/3i") == GaussQ(mpq_class(1), mpq_class(-2, 3)));
    CHECK(parse_scalar("0.25") == GaussQ::fraction(1, 4));
    CHECK(parse_scalar("-i") == -GaussQ::i());
    CHECK(parse_scalar("3i") == GaussQ(mpq_class(0), mpq_class(3)));
    qaut::testing::Rng rng(81);
    for (int trial = 0; trial < 200; ++trial) {
      const GaussQ s = rng.scalar();
      CHECK(parse_scalar(s.str()) == s);
    }
  }

  TEST_CASE("DSL errors carry line and column") {
    require_parse_error("space X(4);\nvariant bogus;", 2, 9);
    require_parse_error("space Y(2);", 1, 7);
    require_parse_error("variant aut;", 1, 13);
    require_parse_error("space X(2); variant q_aut;", 1, 27);
    require_parse_error("space X(2); variant q_aut; Q diag(1,2,3);", 1, 28);
    require_parse_error("space X(2); variant aut; Q diag(1,2);", 1, 26);
    require_parse_error("space X(2); space X(3);", 1, 13);
    require_parse_error("space X(0);", 1, 9);
    require_parse_error("space X(2) @", 1, 12);
    require_parse_error("space X(2); variant a_o_new; Q matrix [[1, 0], [0]];", 1, 39);
    CHECK_THROWS_AS(build_presentation(parse_dsl("space X(2); variant q_aut; Q diag(1,-1);")), NotPositive);
  }

  TEST_CASE("exit-code contract") {
    Report r;
    r.entries = {entry(Verdict::Pass, true), entry(Verdict::Fail, false)};
    CHECK(r.overall() == Verdict::Pass);
    CHECK(r.exit_code() == 0);
    r.entries.push_back(entry(Verdict::Inconclusive, true));
    CHECK(r.overall() == Verdict::Inconclusive);
    CHECK(r.exit_code() == 3);
    r.entries.push_back(entry(Verdict::Fail, true));
    CHECK(r.overall() == Verdict::Fail);
    CHECK(r.exit_code() == 2);
  }

  TEST_CASE("commands on the documented examples") {
    const Report hopf = run_inline("check-hopf", "space M(2); variant aut;");
    CHECK(hopf.find("hopf.coassociativity")->report.verdict == Verdict::Pass);
    CHECK(hopf.find("hopf.counit")->report.verdict == Verdict::Pass);
    CHECK(hopf.exit_code() == 0);

    const Report full = run_inline("full-report", "space X(3); variant aut;");
    CHECK(full.exit_code() == 0);
    const ReportEntry* points = full.find("classical.characters");
    REQUIRE(points != nullptr);
    CHECK(points->values["count"] == 6);
    CHECK(points->values["points"].size() == 6);

    const Report demo = run_inline("rep-demo", "space X(4); variant aut;");
    const ReportEntry* comm = demo.find("models.two_projection.commutator");
    REQUIRE(comm != nullptr);
    CHECK(std::abs(comm->values["commutator_norm"].get<double>() - 0.5) < 1e-9);
    CHECK(demo.find("models.soundness")->report.verdict == Verdict::Pass);

    for (const std::string& command : command_names()) {
      INFO(command);
      CHECK(run_inline(command, "space X(2); variant aut;").exit_code() == 0);
    }
  }

  TEST_CASE("shallow budgets give inconclusive, not fail") {
    RunConfig cfg;
    cfg.command = "check-hopf";
    cfg.dsl = "space X(3); variant aut;";
    cfg.limits.degree_cap = 2;
    const Report r = run(cfg);
    CHECK(r.exit_code() == 3);
    CHECK(r.find("hopf.antipode")->report.verdict == Verdict::Inconclusive);
  }

  TEST_CASE("reports are byte-identical for the same seed") {
    const std::string a = run_inline("full-report", "space X(3); variant aut;", 7).to_json().dump(2);
    const std::string b = run_inline("full-report", "space X(3); variant aut;", 7).to_json().dump(2);
    CHECK(a == b);
    const nlohmann::json j = nlohmann::json::parse(a);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["version"] == tool_version());
    CHECK(j["config"]["seed"] == 7);
    CHECK(j["entries"][0].contains("elapsed_ms") == false);
    CHECK(a.find("elapsed_ms") == std::string::npos);
  }

  TEST_CASE("trace lists derived rules only") {
    const std::string path = "qaut_cli_trace_test.jsonl";
    RunConfig cfg;
    cfg.command = "check-hopf";
    cfg.dsl = "space X(4); variant aut;";
    cfg.trace_path = path;
    run(cfg);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    int positivity = 0;
    std::set<long long> ids;
    while (std::getline(in, line)) {
      const nlohmann::json j = nlohmann::json::parse(line);
      const std::string origin = j["origin"];
      CHECK((origin == "critical_pair" || origin == "positivity"));
      CHECK_FALSE(j["parents"].empty());
      const long long id = j["id"].get<long long>();
      for (const auto& parent : j["parents"]) CHECK(parent.get<long long>() < id);
      if (origin == "positivity") ++positivity;
      ids.insert(id);
      ++lines;
    }
    CHECK(lines > 0);
    CHECK(positivity > 0);
    CHECK(ids.size() == static_cast<std::size_t>(lines));
    std::remove(path.c_str());
  }

  TEST_CASE("usage errors") {
    CHECK_THROWS_AS(run_inline("no-such-command", "space X(2);"), UsageError);
    CHECK_THROWS_AS(run_inline("check-hopf", "space X(2"), ParseError);
    RunConfig missing;
    missing.command = "check-hopf";
    missing.input_path = "/nonexistent/qaut.dsl";
    CHECK_THROWS_AS(run(missing), UsageError);
  }
}
