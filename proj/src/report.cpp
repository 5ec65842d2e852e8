#include "qaut/report.hpp"

namespace qaut {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

Verdict nonzero_verdict(const NCPoly& original, const RewriteSystem& sys) {
  if (sys.exhaustive()) return Verdict::Fail;
  if (sys.status() != SystemStatus::ConfluentUpTo) return Verdict::Inconclusive;
  const std::size_t deg = original.degree();
  const std::size_t rmax = sys.max_rule_degree();
  if (sys.degree_cap() >= rmax && deg <= sys.degree_cap() - rmax) return Verdict::Fail;
  return Verdict::Inconclusive;
}

namespace {

void record(StructureReport& rep, Verdict v, const std::string& label, NCPoly nf) {
  const bool replace = !rep.witness || (v == Verdict::Fail && rep.verdict != Verdict::Fail);
  rep.verdict = combine(rep.verdict, v);
  if (replace) {
    rep.witness = std::move(nf);
    rep.witness_label = label;
  }
}

}  // namespace

StructureReport verify_identities(std::string check, const std::vector<Identity>& ids,
                                  const RewriteSystem& sys) {
  StructureReport rep;
  rep.check = std::move(check);
  rep.identities = ids.size();
  rep.rules_used = sys.rules().size();
  rep.system_status = to_string(sys.status());
  for (const Identity& id : ids) {
    NCPoly nf = sys.reduce(id.poly);
    if (nf.is_zero()) continue;
    record(rep, nonzero_verdict(id.poly, sys), id.label, std::move(nf));
  }
  return rep;
}

StructureReport verify_free(std::string check, const std::vector<Identity>& ids) {
  StructureReport rep;
  rep.check = std::move(check);
  rep.identities = ids.size();
  rep.system_status = "free";
  for (const Identity& id : ids) {
    if (!id.poly.is_zero()) record(rep, Verdict::Fail, id.label, id.poly);
  }
  return rep;
}

}  // namespace qaut
