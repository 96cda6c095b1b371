#include "taumatch/bijection.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace taumatch {

char condition_letter(Condition c) { return static_cast<char>('a' + static_cast<int>(c)); }

Condition parse_condition(char letter) {
  switch (letter) {
    case 'a': case 'A': return Condition::A;
    case 'b': case 'B': return Condition::B;
    case 'c': case 'C': return Condition::C;
    case 'd': case 'D': return Condition::D;
    default: throw std::invalid_argument(std::string("unknown condition '") + letter + "'");
  }
}

bool EdgeLabel::any() const {
  return std::any_of(flags.begin(), flags.end(), [](const ConditionFlag& f) { return f.holds; });
}

std::optional<Condition> EdgeLabel::best() const {
  for (std::size_t k = 0; k < flags.size(); ++k)
    if (flags[k].holds) return static_cast<Condition>(k);
  return std::nullopt;
}

namespace {

void require_compatible(const VerifiedPair& left, const VerifiedPair& right) {
  if (left.verification.status != PairStatus::SupportTauTilting ||
      right.verification.status != PairStatus::SupportTauTilting)
    throw BijectionError("pairs not verified");
  if (left.algebra() != right.algebra()) throw BijectionError("pairs live over different algebras");
  if (left.size() != right.size()) throw BijectionError("pairs have different summand counts");
}

void from_rigidity(ConditionFlag& flag, const RigidityResult& r) {
  if (r.rigid) return;
  flag.holds = true;
  if (r.witness) flag.witness.push_back(*r.witness);
}

}  // namespace

EdgeLabel classify_edge(const VerifiedPair& left, const VerifiedPair& right, std::size_t i, std::size_t j) {
  require_compatible(left, right);
  if (i >= left.size() || j >= right.size()) throw BijectionError("summand index out of range");
  const Representation& x = left.summand(i).module;
  const Representation& y = right.summand(j).module;
  EdgeLabel label;

  const IsomorphismCertificate iso = compare_indecomposables(x, y);
  if (iso.isomorphic) {
    label.flag(Condition::A).holds = true;
    label.flag(Condition::A).witness = {*iso.forward, *iso.backward};
  }
  from_rigidity(label.flag(Condition::B), is_tau_rigid(direct_sum({x, y})));
  if (right.in_projective_part(j)) from_rigidity(label.flag(Condition::C), is_tau_rigid_pair(x, y));
  if (left.in_projective_part(i)) from_rigidity(label.flag(Condition::D), is_tau_rigid_pair(y, x));
  return label;
}

FSets compute_F_sets(const VerifiedPair& left, const VerifiedPair& right) {
  require_compatible(left, right);
  FSets f;
  f.n = left.size();
  f.sets.resize(f.n);
  f.labels.assign(f.n, std::vector<EdgeLabel>(f.n));
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j) {
      f.labels[i][j] = classify_edge(left, right, i, j);
      if (f.labels[i][j].any()) f.sets[i].push_back(j);
    }
  return f;
}

IndexSets restricted_sets(const FSets& f, const std::vector<Condition>& drop) {
  for (Condition c : drop)
    if (c != Condition::C && c != Condition::D) throw BijectionError("only conditions c and d can be dropped");
  IndexSets out(f.n);
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j) {
      const EdgeLabel& label = f.labels[i][j];
      for (std::size_t k = 0; k < label.flags.size(); ++k) {
        const auto c = static_cast<Condition>(k);
        if (label.flags[k].holds && std::find(drop.begin(), drop.end(), c) == drop.end()) {
          out[i].push_back(j);
          break;
        }
      }
    }
  return out;
}

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

class Kuhn {
 public:
  Kuhn(const IndexSets& adjacency, std::size_t n) : adj_(adjacency), match_right_(n, kUnmatched) {}

  bool augment(std::size_t i) {
    visited_.assign(match_right_.size(), false);
    return dfs(i);
  }

  const std::vector<std::size_t>& match_right() const { return match_right_; }

 private:
  bool dfs(std::size_t i) {
    for (std::size_t j : adj_[i]) {
      if (j >= match_right_.size()) throw BijectionError("index set entry out of range");
      if (visited_[j]) continue;
      visited_[j] = true;
      if (match_right_[j] == kUnmatched || dfs(match_right_[j])) {
        match_right_[j] = i;
        return true;
      }
    }
    return false;
  }

  const IndexSets& adj_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

// Left indices reachable from `root` by alternating paths of a maximum matching.
std::vector<std::size_t> alternating_tree(const IndexSets& sets, const std::vector<std::size_t>& match_right,
                                          std::size_t root) {
  std::vector<bool> seen_left(sets.size(), false), seen_right(match_right.size(), false);
  std::vector<std::size_t> stack{root}, tree;
  seen_left[root] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    tree.push_back(x);
    for (std::size_t j : sets[x]) {
      if (seen_right[j]) continue;
      seen_right[j] = true;
      const std::size_t partner = match_right[j];
      if (partner != kUnmatched && !seen_left[partner]) {
        seen_left[partner] = true;
        stack.push_back(partner);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

IndexSets a_first_order(const FSets& f) {
  IndexSets order(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    for (std::size_t j : f.sets[i])
      if (f.labels[i][j].flag(Condition::A).holds) order[i].push_back(j);
    for (std::size_t j : f.sets[i])
      if (!f.labels[i][j].flag(Condition::A).holds) order[i].push_back(j);
  }
  return order;
}

Permutation run_matching(const IndexSets& order, const IndexSets& sets, std::size_t n) {
  if (order.size() != n) throw BijectionError("expected one index set per summand");
  Kuhn kuhn(order, n);
  std::optional<std::size_t> failed;
  for (std::size_t i = 0; i < n; ++i)
    if (!kuhn.augment(i) && !failed) failed = i;
  if (failed) throw MatchingError(alternating_tree(sets, kuhn.match_right(), *failed));
  Permutation s(n);
  for (std::size_t j = 0; j < n; ++j) s[kuhn.match_right()[j]] = j;
  return s;
}

}  // namespace

HallResult hall_check(const IndexSets& sets, std::size_t n) {
  if (sets.size() != n) throw BijectionError("expected one index set per summand");
  Kuhn kuhn(sets, n);
  std::vector<std::size_t> unmatched;
  for (std::size_t i = 0; i < n; ++i)
    if (!kuhn.augment(i)) unmatched.push_back(i);
  if (unmatched.empty()) return {};
  return {false, alternating_tree(sets, kuhn.match_right(), unmatched.front())};
}

HallResult hall_check(const FSets& f) { return hall_check(f.sets, f.n); }

MatchingError::MatchingError(std::vector<std::size_t> deficient)
    : BijectionError("no perfect matching"), deficient_(std::move(deficient)) {}

Permutation find_matching(const FSets& f) { return run_matching(a_first_order(f), f.sets, f.n); }

Permutation find_matching(const IndexSets& sets, std::size_t n) { return run_matching(sets, sets, n); }

MatchingList all_matchings(const IndexSets& sets, std::size_t n, std::size_t limit, std::size_t max_n) {
  if (n > max_n) throw BijectionError("n too large for exhaustive enumeration");
  if (sets.size() != n) throw BijectionError("expected one index set per summand");
  MatchingList out;
  Permutation current(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      if (out.permutations.size() == limit) {
        out.truncated = true;
        return false;
      }
      out.permutations.push_back(current);
      return true;
    }
    for (std::size_t j : sets[i]) {
      if (used[j]) continue;
      used[j] = true;
      current[i] = j;
      const bool go_on = extend(i + 1);
      used[j] = false;
      if (!go_on) return false;
    }
    return true;
  };
  extend(0);
  return out;
}

MatchingList all_matchings(const FSets& f, std::size_t limit, std::size_t max_n) {
  return all_matchings(f.sets, f.n, limit, max_n);
}

std::string cycle_notation(const Permutation& s) {
  std::ostringstream out;
  std::vector<bool> seen(s.size(), false);
  for (std::size_t start = 0; start < s.size(); ++start) {
    if (seen[start] || s[start] == start) continue;
    out << '(';
    std::size_t k = start;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      out << (first ? "" : " ") << k + 1;
      first = false;
      k = s[k];
    }
    out << ')';
  }
  const std::string text = out.str();
  return text.empty() ? "()" : text;
}

PairSummary summarize(const VerifiedPair& pair) {
  PairSummary out{pair.pair.name, to_string(pair.verification.status), {}};
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const NamedModule& m = pair.summand(i);
    out.summands.push_back({m.name, pair.in_projective_part(i) ? "P" : "T", m.module.dims()});
  }
  return out;
}

BijectionReport build_report(const SupportPair& left, const SupportPair& right, const BijectionOptions& options) {
  if (left.algebra != right.algebra) throw BijectionError("pairs live over different algebras");
  return build_report(require_support_tau_tilting(left), require_support_tau_tilting(right), options);
}

BijectionReport build_report(const VerifiedPair& left, const VerifiedPair& right, const BijectionOptions& options) {
  require_compatible(left, right);
  BijectionReport report;
  report.left = summarize(left);
  report.right = summarize(right);
  report.fsets = compute_F_sets(left, right);
  report.hall = hall_check(report.fsets);
  if (!report.hall.ok)
    throw InternalError("Hall condition fails for verified support tau-tilting pairs '" + left.pair.name + "' and '" +
                        right.pair.name + "'");
  report.matching = find_matching(report.fsets);
  for (std::size_t i = 0; i < report.fsets.n; ++i) {
    const auto best = report.fsets.labels[i][report.matching[i]].best();
    if (!best) throw InternalError("matched edge without a condition");
    report.matched_conditions.push_back(*best);
  }
  if (options.enumerate_all)
    report.all = all_matchings(report.fsets, options.limit, options.max_enumeration_n);
  if (!options.drop.empty()) {
    report.dropped = options.drop;
    std::sort(report.dropped.begin(), report.dropped.end());
    report.dropped.erase(std::unique(report.dropped.begin(), report.dropped.end()), report.dropped.end());
    report.restricted = restricted_sets(report.fsets, report.dropped);
  }
  return report;
}

}  // namespace taumatch
