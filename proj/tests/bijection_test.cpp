#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "taumatch/bijection.hpp"

#include "support/corpus.hpp"
#include "support/properties.hpp"

using namespace taumatch;

namespace {

VerifiedPair verified(const WorkspaceSpec& ws, const std::string& name) {
  const SupportPair* p = ws.find_pair(name);
  REQUIRE(p);
  return require_support_tau_tilting(*p);
}

struct Example {
  VerifiedPair left, right;
};

Example example(const std::string& file) {
  const WorkspaceSpec ws = corpus::load(file);
  return {verified(ws, "left"), verified(ws, "right")};
}

// 1-based sets, as printed in reports.
IndexSets sets(std::initializer_list<std::initializer_list<std::size_t>> one_based) {
  IndexSets out;
  for (const auto& s : one_based) {
    std::vector<std::size_t> v;
    for (std::size_t x : s) v.push_back(x - 1);
    out.push_back(v);
  }
  return out;
}

bool contains(const std::vector<std::size_t>& s, std::size_t one_based) {
  return std::find(s.begin(), s.end(), one_based - 1) != s.end();
}

// Brute-force oracles.
bool hall_by_subsets(const IndexSets& f, std::size_t n) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << f.size()); ++mask) {
    std::set<std::size_t> u;
    std::size_t size = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (mask >> i & 1) {
        ++size;
        u.insert(f[i].begin(), f[i].end());
      }
    if (u.size() < size) return false;
  }
  return f.size() == n;
}

std::vector<Permutation> matchings_by_permutations(const IndexSets& f, std::size_t n) {
  std::vector<Permutation> out;
  Permutation s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = std::find(f[i].begin(), f[i].end(), s[i]) != f[i].end();
    if (ok) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

IndexSets random_sets(std::mt19937& rng, std::size_t n, int density) {
  std::uniform_int_distribution<int> pick(0, 9);
  IndexSets f(n);
  for (auto& s : f)
    for (std::size_t j = 0; j < n; ++j)
      if (pick(rng) < density) s.push_back(j);
  return f;
}

}  // namespace

TEST_CASE("condition letters") {
  CHECK(condition_letter(Condition::A) == 'a');
  CHECK(condition_letter(Condition::D) == 'd');
  CHECK(parse_condition('c') == Condition::C);
  CHECK_THROWS_AS(parse_condition('e'), std::invalid_argument);
}

TEST_CASE("edge classification in the two-arrow example") {
  const Example ex = example("two_arrows.json");
  const EdgeLabel e23 = classify_edge(ex.left, ex.right, 1, 2);
  CHECK_FALSE(e23.flag(Condition::A).holds);
  CHECK_FALSE(e23.flag(Condition::B).holds);
  CHECK(e23.flag(Condition::C).holds);
  REQUIRE(e23.flag(Condition::C).witness.size() == 1);
  CHECK_FALSE(e23.flag(Condition::C).witness.front().is_zero());

  const EdgeLabel e13 = classify_edge(ex.left, ex.right, 0, 2);
  CHECK(e13.flag(Condition::A).holds);
  REQUIRE(e13.flag(Condition::A).witness.size() == 2);
  const Morphism& phi = e13.flag(Condition::A).witness[0];
  const Morphism& psi = e13.flag(Condition::A).witness[1];
  CHECK(compose(psi, phi) == identity_morphism(ex.left.summand(0).module));

  const EdgeLabel e33 = classify_edge(ex.left, ex.right, 2, 2);
  CHECK_FALSE(e33.any());

  // X1 + Y1 and X1 + Y2 are not tau-rigid.
  CHECK(classify_edge(ex.left, ex.right, 0, 0).flag(Condition::B).holds);
  CHECK(classify_edge(ex.left, ex.right, 0, 1).flag(Condition::B).holds);
  CHECK_THROWS_AS(classify_edge(ex.left, ex.right, 3, 0), BijectionError);
}

TEST_CASE("candidate sets of the worked examples") {
  const Example e2 = example("two_arrows.json");
  const FSets f = compute_F_sets(e2.left, e2.right);
  CHECK(f.sets == sets({{1, 2, 3}, {3}, {1, 2}}));

  const Example e7 = example("arrow_into_loop.json");
  CHECK(compute_F_sets(e7.left, e7.right).sets.front() == sets({{2}}).front());

  const Example e6 = example("loop_then_arrow.json");
  CHECK(compute_F_sets(e6.left, e6.right).sets == sets({{1, 2}, {1, 2}}));

  const Example e5 = example("two_cycle.json");
  const FSets f5 = compute_F_sets(e5.left, e5.right);
  // (Y1, X2) = (2, 2/1) and (X1, Y2) = (1, 1/2) are not tau-rigid pairs.
  CHECK(f5.labels[1][0].flag(Condition::D).holds);
  CHECK(f5.labels[0][1].flag(Condition::C).holds);

  for (const Example& ex : {e2, e5, e6, e7}) {
    const FSets self = compute_F_sets(ex.left, ex.left);
    for (std::size_t i = 0; i < self.n; ++i) CHECK(self.labels[i][i].flag(Condition::A).holds);
  }
}

TEST_CASE("restricted sets") {
  const Example e2 = example("two_arrows.json");
  const FSets f = compute_F_sets(e2.left, e2.right);
  CHECK(restricted_sets(f, {Condition::C}) == sets({{1, 2, 3}, {}, {1, 2}}));
  CHECK(restricted_sets(f, {}) == f.sets);
  CHECK_THROWS_AS(restricted_sets(f, {Condition::A}), BijectionError);

  const Example e4 = example("two_arrows_alt.json");
  const IndexSets h = restricted_sets(compute_F_sets(e4.left, e4.right), {Condition::D});
  for (const auto& s : h) CHECK_FALSE(contains(s, 2));
  CHECK(contains(h[0], 3));
  CHECK(contains(h[1], 1));
  CHECK(contains(h[2], 1));
  const HallResult hall = hall_check(h, 3);
  CHECK_FALSE(hall.ok);
  CHECK_FALSE(hall.deficient.empty());
}

TEST_CASE("Hall check") {
  CHECK(hall_check(sets({{1, 2, 3}, {3}, {1, 2}}), 3).ok);
  const HallResult pigeon = hall_check(sets({{1}, {1}}), 2);
  CHECK_FALSE(pigeon.ok);
  CHECK(pigeon.deficient == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(hall_check(sets({{1}}), 2), BijectionError);
}

TEST_CASE("Hall check agrees with subset enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IndexSets f = random_sets(rng, n, 2 + trial % 4);
    const HallResult h = hall_check(f, n);
    CHECK(h.ok == hall_by_subsets(f, n));
    if (!h.ok) {
      std::set<std::size_t> u;
      for (std::size_t i : h.deficient) u.insert(f[i].begin(), f[i].end());
      CHECK(u.size() < h.deficient.size());
    }
  }
}

TEST_CASE("find_matching") {
  const Example e2 = example("two_arrows.json");
  const Permutation s = find_matching(compute_F_sets(e2.left, e2.right));
  CHECK(cycle_notation(s) == "(1 2 3)");
  CHECK(s[1] == 2);

  const Example e5 = example("two_cycle.json");
  CHECK(cycle_notation(find_matching(compute_F_sets(e5.left, e5.right))) == "(1 2)");

  CHECK(find_matching(sets({{1}, {2}, {3}}), 3) == Permutation{0, 1, 2});
  try {
    find_matching(sets({{1}, {1}, {2, 3}}), 3);
    FAIL("expected MatchingError");
  } catch (const MatchingError& e) {
    CHECK(e.deficient() == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("find_matching on random systems is valid whenever Hall holds") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const IndexSets f = random_sets(rng, n, 3 + trial % 5);
    if (!hall_by_subsets(f, n)) {
      CHECK_THROWS_AS(find_matching(f, n), MatchingError);
      continue;
    }
    const Permutation s = find_matching(f, n);
    std::set<std::size_t> image(s.begin(), s.end());
    CHECK(image.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::find(f[i].begin(), f[i].end(), s[i]) != f[i].end());
  }
}

TEST_CASE("all_matchings") {
  const Example e2 = example("two_arrows.json");
  const MatchingList all = all_matchings(compute_F_sets(e2.left, e2.right), 1000);
  std::vector<std::string> cycles;
  for (const auto& s : all.permutations) {
    cycles.push_back(cycle_notation(s));
    CHECK(s[0] != 2);
  }
  std::sort(cycles.begin(), cycles.end());
  CHECK(cycles == std::vector<std::string>{"(1 2 3)", "(2 3)"});
  CHECK_FALSE(all.truncated);

  const Example e7 = example("arrow_into_loop.json");
  const MatchingList only = all_matchings(compute_F_sets(e7.left, e7.right), 1000);
  REQUIRE(only.permutations.size() == 1);
  CHECK(cycle_notation(only.permutations.front()) == "(1 2)");

  const IndexSets full = sets({{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}});
  CHECK(all_matchings(full, 4, 1000).permutations.size() == 24);
  const MatchingList capped = all_matchings(full, 4, 5);
  CHECK(capped.permutations.size() == 5);
  CHECK(capped.truncated);
  CHECK_THROWS_WITH(all_matchings(IndexSets(11), 11, 10), doctest::Contains("n too large"));
}

TEST_CASE("all_matchings agrees with permutation enumeration") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IndexSets f = random_sets(rng, n, 4 + trial % 5);
    const MatchingList got = all_matchings(f, n, 100000);
    CHECK(got.permutations == matchings_by_permutations(f, n));
  }
}

TEST_CASE("cycle notation") {
  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({1, 2, 0}) == "(1 2 3)");
  CHECK(cycle_notation({0, 2, 1}) == "(2 3)");
  CHECK(cycle_notation({1, 0, 3, 2}) == "(1 2)(3 4)");
  CHECK(cycle_notation({}) == "()");
}

TEST_CASE("reports") {
  const Example e6 = example("loop_then_arrow.json");
  BijectionOptions options;
  options.enumerate_all = true;
  const BijectionReport r = build_report(e6.left, e6.right, options);
  CHECK(r.fsets.sets == sets({{1, 2}, {1, 2}}));
  REQUIRE(r.all);
  const auto& perms = r.all->permutations;
  CHECK(std::find(perms.begin(), perms.end(), Permutation{0, 1}) != perms.end());
  for (std::size_t i = 0; i < r.fsets.n; ++i)
    CHECK(r.matched_conditions[i] == *r.fsets.labels[i][r.matching[i]].best());

  const BijectionReport self = build_report(e6.left, e6.left, {});
  CHECK(self.matching == Permutation{0, 1});
  for (Condition c : self.matched_conditions) CHECK(c == Condition::A);

  const Example e7 = example("arrow_into_loop.json");
  CHECK_THROWS_WITH_AS(build_report(e6.left, e7.right, {}), doctest::Contains("different algebras"), BijectionError);
  CHECK_THROWS_AS(build_report(e6.left.pair, e7.right.pair, {}), BijectionError);

  const WorkspaceSpec ws = corpus::load("two_arrows.json");
  SupportPair bad = *ws.find_pair("left");
  bad.t_summands.push_back(bad.t_summands.front());
  CHECK_THROWS_AS(build_report(bad, *ws.find_pair("right"), {}), VerificationError);
}

TEST_CASE("matching exists between every pair of verified corpus pairs") {
  std::size_t total = 0;
  const properties::Outcome o = properties::matching_suite(&total);
  for (const auto& f : o.failures) FAIL_CHECK(f);
  CHECK(o.ok());
  CHECK(total >= 6);
}
