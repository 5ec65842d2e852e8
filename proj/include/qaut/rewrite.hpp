#pragma once

// Oriented rewriting modulo a two-sided *-ideal of the free algebra, with
// degree-bounded Buchberger-style completion on word overlaps.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaut/ncalg.hpp"

namespace qaut {

enum class RuleOrigin { Declared, StarClosure, CriticalPair, Positivity, Assembled };

std::string to_string(RuleOrigin origin);

/// lhs -> rhs, read as the monic relation lhs - rhs. Every word of rhs is
/// strictly smaller than lhs.
struct RewriteRule {
  std::size_t id = 0;
  Word lhs;
  NCPoly rhs;
  RuleOrigin origin = RuleOrigin::Declared;
  std::vector<std::size_t> parents;

  NCPoly relation() const { return NCPoly::monomial(lhs) - rhs; }
};

enum class SystemStatus { Raw, ConfluentUpTo, BudgetExhausted };

std::string to_string(SystemStatus status);

struct CompletionLimits {
  std::size_t degree_cap = 8;
  std::size_t rule_cap = 20000;
};

/// Elements x_1..x_k for which sum_i x_i^* x_i is expected to lie in the
/// ideal. In any C*-algebraic quotient that forces each x_i = 0, so once the
/// sum reduces to zero the completion adds every x_i as a relation.
struct PositivityFamily {
  std::string label;
  std::vector<NCPoly> elements;
};

enum class ReductionStrategy { Leftmost, Rightmost };

class UnorientableRelation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CompletionStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_to_zero = 0;
  std::size_t pairs_truncated = 0;
  std::size_t rules_created = 0;
  std::size_t positivity_families_used = 0;
};

/// Called once for every rule the completion creates, in creation order.
using TraceSink = std::function<void(const RewriteRule&)>;

class RewriteSystem {
 public:
  RewriteSystem();

  /// Live rules in creation order.
  const std::vector<RewriteRule>& rules() const { return rules_; }
  SystemStatus status() const { return status_; }
  const CompletionLimits& limits() const { return limits_; }
  std::size_t degree_cap() const { return limits_.degree_cap; }
  std::size_t rule_cap() const { return limits_.rule_cap; }
  /// True when no overlap was skipped for exceeding the degree cap and the
  /// rule budget held, i.e. the rule set is a full Groebner basis.
  bool exhaustive() const { return exhaustive_; }
  const CompletionStats& stats() const { return stats_; }
  const std::vector<PositivityFamily>& positivity() const { return positivity_; }
  std::size_t max_rule_degree() const;
  /// Whether some rule has an empty left-hand side (the ideal is everything).
  bool trivial() const;

  /// Normal form: no word of the result contains a left-hand side.
  NCPoly reduce(const NCPoly& p, ReductionStrategy strategy = ReductionStrategy::Leftmost,
                std::size_t* steps = nullptr) const;
  bool is_irreducible(const Word& w) const;

  /// Wraps an already interreduced rule list. Throws std::invalid_argument if
  /// some left-hand side contains another.
  static RewriteSystem assemble(std::vector<RewriteRule> rules, SystemStatus status,
                                CompletionLimits limits, bool exhaustive);

  /// Prefix tree over left-hand sides.
  class LhsIndex {
   public:
    LhsIndex();
    void insert(const Word& lhs, int rule);
    void erase(const Word& lhs);
    /// Rule whose lhs starts at `pos` in `w`, with the lhs length.
    std::optional<std::pair<int, std::size_t>> match_at(const Word& w, std::size_t pos) const;
    int root_rule() const { return nodes_.front().rule; }

   private:
    struct Node {
      std::vector<std::pair<Gen, int>> kids;  // sorted by generator
      int rule = -1;
    };
    int child(int node, Gen g) const;
    std::vector<Node> nodes_;
  };

 private:
  friend class Completion;

  struct Match {
    std::size_t pos;
    std::size_t len;
    int rule;
  };
  std::optional<Match> find_match(const Word& w, ReductionStrategy strategy) const;

  std::vector<RewriteRule> rules_;
  LhsIndex index_;  // maps to positions in rules_
  SystemStatus status_ = SystemStatus::Raw;
  CompletionLimits limits_;
  bool exhaustive_ = false;
  CompletionStats stats_;
  std::vector<PositivityFamily> positivity_;
};

/// Monic, star-closed, interreduced rules for the given relations; status
/// Raw. Throws UnorientableRelation for a zero relation.
RewriteSystem orient(const std::vector<NCPoly>& relations, CompletionLimits limits = {},
                     std::vector<PositivityFamily> positivity = {});

/// Resolves overlaps up to the degree cap. Budget exhaustion is reported in
/// the status, never thrown.
RewriteSystem complete(const RewriteSystem& sys, const TraceSink& trace = {});

NCPoly reduce(const NCPoly& p, const RewriteSystem& sys);

enum class Membership { InIdeal, NotInIdealUpTo, Inconclusive };

std::string to_string(Membership m);

struct MembershipVerdict {
  Membership verdict;
  std::size_t degree_cap;
  NCPoly normal_form;
};

MembershipVerdict ideal_member(const NCPoly& p, const RewriteSystem& sys);

}  // namespace qaut
