#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qaut/ncalg.hpp"
#include "qaut/rewrite.hpp"

namespace qaut {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Fail beats Inconclusive beats Pass.
Verdict combine(Verdict a, Verdict b);

struct StructureReport {
  std::string check;
  Verdict verdict = Verdict::Pass;
  /// Nonzero normal form refuting the check (Fail) or left undecided
  /// (Inconclusive), with the identity it came from.
  std::optional<NCPoly> witness;
  std::string witness_label;
  std::size_t identities = 0;
  std::size_t rules_used = 0;
  std::string system_status;
  std::string details;
};

/// A polynomial expected to vanish in the quotient.
struct Identity {
  std::string label;
  NCPoly poly;
};

/// Verdict for a single nonzero normal form: Fail when the system decides
/// membership at this degree, Inconclusive otherwise.
Verdict nonzero_verdict(const NCPoly& original, const RewriteSystem& sys);

/// Reduces every identity; the first Fail (or, failing that, the first
/// Inconclusive) supplies the witness.
StructureReport verify_identities(std::string check, const std::vector<Identity>& ids,
                                  const RewriteSystem& sys);

/// Identities that must hold exactly, with no quotient.
StructureReport verify_free(std::string check, const std::vector<Identity>& ids);

}  // namespace qaut
