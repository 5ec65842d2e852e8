#include "qaut/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qaut {

std::string to_string(RuleOrigin origin) {
  switch (origin) {
    case RuleOrigin::Declared: return "declared";
    case RuleOrigin::StarClosure: return "star_closure";
    case RuleOrigin::CriticalPair: return "critical_pair";
    case RuleOrigin::Positivity: return "positivity";
    case RuleOrigin::Assembled: return "assembled";
  }
  return "unknown";
}

std::string to_string(SystemStatus status) {
  switch (status) {
    case SystemStatus::Raw: return "raw";
    case SystemStatus::ConfluentUpTo: return "confluent_up_to";
    case SystemStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::InIdeal: return "in_ideal";
    case Membership::NotInIdealUpTo: return "not_in_ideal_up_to";
    case Membership::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// LhsIndex

RewriteSystem::LhsIndex::LhsIndex() : nodes_(1) {}

int RewriteSystem::LhsIndex::child(int node, Gen g) const {
  const auto& kids = nodes_[static_cast<std::size_t>(node)].kids;
  auto it = std::lower_bound(kids.begin(), kids.end(), g,
                             [](const std::pair<Gen, int>& k, Gen key) { return k.first < key; });
  if (it != kids.end() && it->first == g) return it->second;
  return -1;
}

void RewriteSystem::LhsIndex::insert(const Word& lhs, int rule) {
  int node = 0;
  for (Gen g : lhs) {
    int next = child(node, g);
    if (next < 0) {
      next = static_cast<int>(nodes_.size());
      nodes_.emplace_back();
      auto& kids = nodes_[static_cast<std::size_t>(node)].kids;
      auto it = std::lower_bound(
          kids.begin(), kids.end(), g,
          [](const std::pair<Gen, int>& k, Gen key) { return k.first < key; });
      kids.insert(it, {g, next});
    }
    node = next;
  }
  nodes_[static_cast<std::size_t>(node)].rule = rule;
}

void RewriteSystem::LhsIndex::erase(const Word& lhs) {
  int node = 0;
  for (Gen g : lhs) {
    node = child(node, g);
    if (node < 0) return;
  }
  nodes_[static_cast<std::size_t>(node)].rule = -1;
}

std::optional<std::pair<int, std::size_t>> RewriteSystem::LhsIndex::match_at(
    const Word& w, std::size_t pos) const {
  int node = 0;
  if (nodes_[0].rule >= 0) return std::make_pair(nodes_[0].rule, std::size_t{0});
  for (std::size_t p = pos; p < w.size(); ++p) {
    node = child(node, w[p]);
    if (node < 0) return std::nullopt;
    const int r = nodes_[static_cast<std::size_t>(node)].rule;
    if (r >= 0) return std::make_pair(r, p - pos + 1);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reduction shared by RewriteSystem and the completion engine.

namespace {

using WorkMap = std::map<Word, GaussQ, std::greater<>>;

void accumulate(WorkMap& work, Word w, const GaussQ& c) {
  auto [it, inserted] = work.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) work.erase(it);
  }
}

template <typename FindMatch, typename RhsOf>
NCPoly reduce_with(const NCPoly& p, FindMatch&& find, RhsOf&& rhs_of, std::size_t* steps) {
  WorkMap work;
  for (const auto& t : p.terms()) work.emplace(t.word, t.coeff);
  std::vector<Term> out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    const GaussQ& c = node.mapped();
    auto m = find(w);
    if (!m) {
      out.push_back({w, c});
      continue;
    }
    if (steps) ++*steps;
    const auto [pos, len, rule] = *m;
    const Word left = w.prefix(pos);
    const Word right = w.suffix_from(pos + len);
    for (const auto& t : rhs_of(rule).terms()) {
      accumulate(work, concat3(left, t.word, right), c * t.coeff);
    }
  }
  return NCPoly::from_terms(std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------
// RewriteSystem

RewriteSystem::RewriteSystem() = default;

std::size_t RewriteSystem::max_rule_degree() const {
  std::size_t d = 0;
  for (const auto& r : rules_) d = std::max(d, r.lhs.size());
  return d;
}

bool RewriteSystem::trivial() const { return index_.root_rule() >= 0; }

std::optional<RewriteSystem::Match> RewriteSystem::find_match(const Word& w,
                                                              ReductionStrategy strategy) const {
  if (index_.root_rule() >= 0) return Match{0, 0, index_.root_rule()};
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t pos = strategy == ReductionStrategy::Leftmost ? k : n - 1 - k;
    if (auto m = index_.match_at(w, pos)) return Match{pos, m->second, m->first};
  }
  return std::nullopt;
}

NCPoly RewriteSystem::reduce(const NCPoly& p, ReductionStrategy strategy,
                             std::size_t* steps) const {
  return reduce_with(
      p,
      [&](const Word& w) -> std::optional<std::tuple<std::size_t, std::size_t, int>> {
        auto m = find_match(w, strategy);
        if (!m) return std::nullopt;
        return std::make_tuple(m->pos, m->len, m->rule);
      },
      [&](int rule) -> const NCPoly& { return rules_[static_cast<std::size_t>(rule)].rhs; },
      steps);
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  return !find_match(w, ReductionStrategy::Leftmost).has_value();
}

RewriteSystem RewriteSystem::assemble(std::vector<RewriteRule> rules, SystemStatus status,
                                      CompletionLimits limits, bool exhaustive) {
  RewriteSystem sys;
  sys.limits_ = limits;
  sys.status_ = status;
  sys.exhaustive_ = exhaustive;
  sys.rules_ = std::move(rules);
  std::set<Word> seen;
  for (std::size_t i = 0; i < sys.rules_.size(); ++i) {
    if (!seen.insert(sys.rules_[i].lhs).second) {
      throw std::invalid_argument("assemble: duplicate left-hand side " + sys.rules_[i].lhs.str());
    }
    sys.index_.insert(sys.rules_[i].lhs, static_cast<int>(i));
  }
  for (const auto& r : sys.rules_) {
    for (std::size_t pos = 0; pos < r.lhs.size(); ++pos) {
      auto m = sys.index_.match_at(r.lhs, pos);
      if (m && (pos != 0 || m->second != r.lhs.size())) {
        throw std::invalid_argument("assemble: rules are not interreduced at " + r.lhs.str());
      }
    }
  }
  return sys;
}

NCPoly reduce(const NCPoly& p, const RewriteSystem& sys) { return sys.reduce(p); }

MembershipVerdict ideal_member(const NCPoly& p, const RewriteSystem& sys) {
  NCPoly nf = sys.reduce(p);
  if (nf.is_zero()) return {Membership::InIdeal, sys.degree_cap(), std::move(nf)};
  if (sys.status() == SystemStatus::ConfluentUpTo) {
    return {Membership::NotInIdealUpTo, sys.degree_cap(), std::move(nf)};
  }
  return {Membership::Inconclusive, sys.degree_cap(), std::move(nf)};
}

// ---------------------------------------------------------------------------
// Completion engine

class Completion {
 public:
  Completion(CompletionLimits limits, std::vector<PositivityFamily> positivity,
             const TraceSink* trace)
      : limits_(limits), positivity_(std::move(positivity)), trace_(trace) {
    applied_.assign(positivity_.size(), false);
  }

  void seed_relation(NCPoly p, RuleOrigin origin, std::vector<std::size_t> parents = {}) {
    pending_.push_back({std::move(p), origin, std::move(parents)});
  }

  void seed_rule(const RewriteRule& r) {
    pending_.push_back({r.relation(), r.origin, r.parents});
  }

  void drain() {
    while (!pending_.empty()) {
      Pending next = std::move(pending_.front());
      pending_.pop_front();
      add_polynomial(next.poly, next.origin, std::move(next.parents));
    }
  }

  void run() {
    drain();
    for (;;) {
      while (!pairs_.empty() && !exhausted_) {
        CriticalPair pair = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        if (!alive_[pair.left] || !alive_[pair.right]) continue;
        ++stats_.pairs_considered;
        const RewriteRule& u = rules_[pair.left];
        const RewriteRule& v = rules_[pair.right];
        const Word a = u.lhs.prefix(u.lhs.size() - pair.overlap);
        const Word b = v.lhs.suffix_from(pair.overlap);
        NCPoly s = v.rhs.sandwich(a, Word{}) - u.rhs.sandwich(Word{}, b);
        std::vector<std::size_t> parents{u.id, v.id};
        const std::size_t before = stats_.rules_created;
        add_polynomial(s, RuleOrigin::CriticalPair, std::move(parents));
        if (stats_.rules_created == before) ++stats_.pairs_to_zero;
        drain();
        if (live_ > limits_.rule_cap) exhausted_ = true;
      }
      if (exhausted_) break;
      if (!apply_positivity()) break;
    }
  }

  RewriteSystem finish(SystemStatus status) {
    RewriteSystem sys;
    sys.limits_ = limits_;
    sys.positivity_ = positivity_;
    std::vector<RewriteRule> live;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i]) live.push_back(rules_[i]);
    }
    for (std::size_t i = 0; i < live.size(); ++i) {
      sys.index_.insert(live[i].lhs, static_cast<int>(i));
    }
    sys.rules_ = std::move(live);
    // Fully reduce right-hand sides so the output is canonical.
    for (auto& r : sys.rules_) r.rhs = sys.reduce(r.rhs);
    sys.status_ = status == SystemStatus::Raw
                      ? SystemStatus::Raw
                      : (exhausted_ ? SystemStatus::BudgetExhausted : SystemStatus::ConfluentUpTo);
    sys.exhaustive_ = sys.status_ == SystemStatus::ConfluentUpTo && !truncated_;
    sys.stats_ = stats_;
    return sys;
  }

 private:
  struct Pending {
    NCPoly poly;
    RuleOrigin origin;
    std::vector<std::size_t> parents;
  };

  // Overlap of u = rules_[left].lhs and v = rules_[right].lhs, where the
  // last `overlap` letters of u equal the first `overlap` letters of v.
  struct CriticalPair {
    Word word;
    std::size_t left;
    std::size_t right;
    std::size_t overlap;

    friend bool operator<(const CriticalPair& a, const CriticalPair& b) {
      if (auto c = a.word <=> b.word; c != 0) return c < 0;
      if (a.left != b.left) return a.left < b.left;
      if (a.right != b.right) return a.right < b.right;
      return a.overlap < b.overlap;
    }
  };

  // `used` collects the ids of the rules applied.
  NCPoly reduce(const NCPoly& p, std::set<std::size_t>* used = nullptr) const {
    return reduce_with(
        p,
        [&](const Word& w) -> std::optional<std::tuple<std::size_t, std::size_t, int>> {
          std::optional<std::tuple<std::size_t, std::size_t, int>> hit;
          if (index_.root_rule() >= 0) {
            hit = std::make_tuple(std::size_t{0}, std::size_t{0}, index_.root_rule());
          } else {
            for (std::size_t pos = 0; pos < w.size() && !hit; ++pos) {
              if (auto m = index_.match_at(w, pos)) hit = std::make_tuple(pos, m->second, m->first);
            }
          }
          if (hit && used) used->insert(rules_[static_cast<std::size_t>(std::get<2>(*hit))].id);
          return hit;
        },
        [&](int rule) -> const NCPoly& { return rules_[static_cast<std::size_t>(rule)].rhs; },
        nullptr);
  }

  void add_polynomial(const NCPoly& p, RuleOrigin origin, std::vector<std::size_t> parents) {
    NCPoly r = reduce(p);
    if (r.is_zero()) return;
    r = r.monic();
    RewriteRule rule;
    rule.id = rules_.size();
    rule.lhs = r.leading().word;
    rule.rhs = NCPoly::monomial(rule.lhs) - r;
    rule.origin = origin;
    rule.parents = std::move(parents);
    const std::size_t id = rule.id;
    rules_.push_back(std::move(rule));
    alive_.push_back(true);
    index_.insert(rules_[id].lhs, static_cast<int>(id));
    ++live_;
    ++stats_.rules_created;
    if (trace_ && *trace_) (*trace_)(rules_[id]);

    const Word& lhs = rules_[id].lhs;
    for (std::size_t k = 0; k < id; ++k) {
      if (!alive_[k]) continue;
      if (rules_[k].lhs.size() >= lhs.size() && rules_[k].lhs.find(lhs)) {
        alive_[k] = false;
        --live_;
        index_.erase(rules_[k].lhs);
        pending_.push_back({rules_[k].relation(), rules_[k].origin, rules_[k].parents});
      }
    }
    for (std::size_t k = 0; k <= id; ++k) {
      if (!alive_[k]) continue;
      add_overlaps(k, id);
      if (k != id) add_overlaps(id, k);
    }
  }

  void add_overlaps(std::size_t left, std::size_t right) {
    const Word& u = rules_[left].lhs;
    const Word& v = rules_[right].lhs;
    const std::size_t max_k = std::min(u.size(), v.size());
    for (std::size_t k = 1; k < max_k; ++k) {
      bool match = true;
      for (std::size_t t = 0; t < k; ++t) {
        if (u[u.size() - k + t] != v[t]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      const std::size_t deg = u.size() + v.size() - k;
      if (deg > limits_.degree_cap) {
        truncated_ = true;
        ++stats_.pairs_truncated;
        continue;
      }
      pairs_.insert({u * v.suffix_from(k), left, right, k});
    }
  }

  bool apply_positivity() {
    bool added = false;
    for (std::size_t f = 0; f < positivity_.size(); ++f) {
      if (applied_[f]) continue;
      NCPoly sum;
      for (const auto& x : positivity_[f].elements) sum += x.star() * x;
      std::set<std::size_t> used;
      if (!reduce(sum, &used).is_zero()) continue;
      // Parents: the rules that certified sum_j x_j^* x_j = 0.
      const std::vector<std::size_t> parents(used.begin(), used.end());
      applied_[f] = true;
      ++stats_.positivity_families_used;
      for (const auto& x : positivity_[f].elements) {
        if (reduce(x).is_zero()) continue;
        pending_.push_back({x, RuleOrigin::Positivity, parents});
        pending_.push_back({x.star(), RuleOrigin::Positivity, parents});
        added = true;
      }
      drain();
    }
    return added;
  }

  CompletionLimits limits_;
  std::vector<PositivityFamily> positivity_;
  std::vector<bool> applied_;
  const TraceSink* trace_;

  std::vector<RewriteRule> rules_;
  std::vector<bool> alive_;
  std::size_t live_ = 0;
  RewriteSystem::LhsIndex index_;
  std::deque<Pending> pending_;
  std::set<CriticalPair> pairs_;
  bool truncated_ = false;
  bool exhausted_ = false;
  CompletionStats stats_;
};

RewriteSystem orient(const std::vector<NCPoly>& relations, CompletionLimits limits,
                     std::vector<PositivityFamily> positivity) {
  Completion engine(limits, std::move(positivity), nullptr);
  for (const auto& r : relations) {
    if (r.is_zero()) throw UnorientableRelation("orient: zero relation has no leading word");
    engine.seed_relation(r, RuleOrigin::Declared);
  }
  for (const auto& r : relations) engine.seed_relation(r.star(), RuleOrigin::StarClosure);
  engine.drain();
  return engine.finish(SystemStatus::Raw);
}

RewriteSystem complete(const RewriteSystem& sys, const TraceSink& trace) {
  Completion engine(sys.limits(), sys.positivity(), &trace);
  for (const auto& r : sys.rules()) engine.seed_rule(r);
  engine.run();
  return engine.finish(SystemStatus::ConfluentUpTo);
}

}  // namespace qaut
