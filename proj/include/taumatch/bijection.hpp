#pragma once

// Candidate sets F(i) between the summands of two basic support tau-tilting
// pairs, the Hall condition on them, and the permutation matchings.
//
// Summands are indexed T-first then P, in declaration order, 0-based here;
// every printed form is 1-based.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumatch/artrans.hpp"

namespace taumatch {

class BijectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (a) X_i ~ Y_j; (b) X_i + Y_j not tau-rigid; (c) Y_j in add P' and the pair
/// (X_i, Y_j) not tau-rigid; (d) X_i in add P and the pair (Y_j, X_i) not
/// tau-rigid.
enum class Condition { A = 0, B = 1, C = 2, D = 3 };

char condition_letter(Condition c);
/// 'a'..'d' (either case); throws std::invalid_argument otherwise.
Condition parse_condition(char letter);

struct ConditionFlag {
  bool holds = false;
  /// (a): the certificate pair phi, psi. (b)-(d): one nonzero morphism in
  /// the Hom space that breaks rigidity.
  std::vector<Morphism> witness;

  friend bool operator==(const ConditionFlag&, const ConditionFlag&) = default;
};

struct EdgeLabel {
  std::array<ConditionFlag, 4> flags;

  const ConditionFlag& flag(Condition c) const { return flags[static_cast<std::size_t>(c)]; }
  ConditionFlag& flag(Condition c) { return flags[static_cast<std::size_t>(c)]; }
  bool any() const;
  /// Highest-priority true condition, a > b > c > d.
  std::optional<Condition> best() const;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

using IndexSets = std::vector<std::vector<std::size_t>>;
/// s[i] = j, 0-based.
using Permutation = std::vector<std::size_t>;

struct FSets {
  std::size_t n = 0;
  IndexSets sets;                             // F(i), increasing
  std::vector<std::vector<EdgeLabel>> labels;  // labels[i][j]

  friend bool operator==(const FSets&, const FSets&) = default;
};

/// Both pairs must be verified over the same algebra with equal size.
EdgeLabel classify_edge(const VerifiedPair& left, const VerifiedPair& right, std::size_t i, std::size_t j);

FSets compute_F_sets(const VerifiedPair& left, const VerifiedPair& right);

/// Membership recomputed from the labels after discarding the dropped
/// conditions (only c and d may be dropped).
IndexSets restricted_sets(const FSets& f, const std::vector<Condition>& drop);

struct HallResult {
  bool ok = true;
  /// When !ok: an index set S with |union of F(k), k in S| < |S|.
  std::vector<std::size_t> deficient;

  friend bool operator==(const HallResult&, const HallResult&) = default;
};

/// Hall condition via maximum matching; a deficient subset is read off the
/// alternating tree of an unmatched index when the matching is not perfect.
HallResult hall_check(const IndexSets& sets, std::size_t n);
HallResult hall_check(const FSets& f);

class MatchingError : public BijectionError {
 public:
  explicit MatchingError(std::vector<std::size_t> deficient);
  const std::vector<std::size_t>& deficient() const { return deficient_; }

 private:
  std::vector<std::size_t> deficient_;
};

/// Kuhn's augmenting paths over i = 1..n in order; each search tries the
/// (a)-edges of i first, then the rest of F(i) in increasing order.
/// Throws MatchingError when no permutation with s(i) in F(i) exists.
Permutation find_matching(const FSets& f);
Permutation find_matching(const IndexSets& sets, std::size_t n);

struct MatchingList {
  std::vector<Permutation> permutations;  // lexicographic order
  bool truncated = false;

  friend bool operator==(const MatchingList&, const MatchingList&) = default;
};

/// Every permutation with s(i) in F(i), by backtracking; stops after `limit`.
/// Throws BijectionError when n exceeds `max_n`.
MatchingList all_matchings(const IndexSets& sets, std::size_t n, std::size_t limit, std::size_t max_n = 10);
MatchingList all_matchings(const FSets& f, std::size_t limit, std::size_t max_n = 10);

/// Cycle notation, 1-based, fixed points omitted: "(1 2 3)", "(2 3)"; "()" for the identity.
std::string cycle_notation(const Permutation& s);

struct BijectionOptions {
  bool enumerate_all = false;
  std::size_t limit = 1000;
  std::size_t max_enumeration_n = 10;
  std::vector<Condition> drop;
};

struct SummandSummary {
  std::string name;
  std::string role;  // "T" or "P"
  std::vector<std::size_t> dims;

  friend bool operator==(const SummandSummary&, const SummandSummary&) = default;
};

struct PairSummary {
  std::string name;
  std::string status;
  std::vector<SummandSummary> summands;

  friend bool operator==(const PairSummary&, const PairSummary&) = default;
};

PairSummary summarize(const VerifiedPair& pair);

struct BijectionReport {
  PairSummary left;
  PairSummary right;
  FSets fsets;
  HallResult hall;
  Permutation matching;
  std::vector<Condition> matched_conditions;  // per i, priority a > b > c > d
  std::optional<MatchingList> all;
  std::vector<Condition> dropped;
  std::optional<IndexSets> restricted;

  friend bool operator==(const BijectionReport&, const BijectionReport&) = default;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Verifies both pairs (VerificationError on failure), rejects pairs over
/// different algebras, then assembles the full report. A Hall failure on
/// verified pairs raises InternalError.
BijectionReport build_report(const SupportPair& left, const SupportPair& right, const BijectionOptions& options = {});
BijectionReport build_report(const VerifiedPair& left, const VerifiedPair& right, const BijectionOptions& options = {});

}  // namespace taumatch
