#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "taumatch/quiver_algebra.hpp"
#include "taumatch/repcore.hpp"
#include "taumatch/standard_modules.hpp"

#include "support/corpus.hpp"

using namespace taumatch;

namespace {

AlgebraPtr two_arrows() {
  Quiver q(3);
  q.add_arrow("a", 0, 1);
  q.add_arrow("c", 0, 2);
  return build_algebra(q, {});
}

AlgebraPtr loop_then_arrow() {
  Quiver q(2);
  q.add_arrow("a", 0, 0);
  q.add_arrow("b", 0, 1);
  return build_algebra(q, {monomial_relation({"a", "a"}), monomial_relation({"a", "b"})});
}

AlgebraPtr arrow_into_loop() {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 1);
  return build_algebra(q, {monomial_relation({"a", "b"}), monomial_relation({"b", "b"})});
}

AlgebraPtr two_cycle() {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  return build_algebra(q, {monomial_relation({"b", "a"}), monomial_relation({"a", "b"})});
}

std::size_t total(const std::vector<std::size_t>& dims) { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

}  // namespace

TEST_CASE("quiver rejects bad arrows") {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  CHECK_THROWS_AS(q.add_arrow("a", 1, 0), AlgebraError);
  CHECK_THROWS_AS(q.add_arrow("z", 0, 2), AlgebraError);
  CHECK(q.find_arrow("a").has_value());
  CHECK_FALSE(q.find_arrow("z").has_value());
}

TEST_CASE("path algebra of two arrows out of one vertex has dimension five") {
  const AlgebraPtr a = two_arrows();
  CHECK(a->dimension() == 5);
  std::vector<std::string> names;
  for (const auto& p : a->basis()) names.push_back(a->path_name(p));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"a", "c", "e1", "e2", "e3"});
}

TEST_CASE("loop with a^2 = 0 and ba = 0 leaves e1, e2, a, b") {
  // Hand enumeration: length-2 paths are a.a and a.b, both relations; b.x
  // does not compose since vertex 2 is a sink.
  const AlgebraPtr a = loop_then_arrow();
  CHECK(a->dimension() == 4);
  std::size_t sum = 0;
  for (std::size_t v = 0; v < 2; ++v) sum += total(projective(a, v).dims());
  CHECK(sum == 4);
  CHECK(a->nilpotency_degree() == 2);
}

TEST_CASE("a loop without relations is not finite dimensional") {
  Quiver q(1);
  q.add_arrow("a", 0, 0);
  CHECK_THROWS_WITH_AS(build_algebra(q, {}), doctest::Contains("not finite dimensional"), AlgebraError);
  BuildOptions small;
  small.max_path_length = 5;
  CHECK_THROWS_AS(build_algebra(q, {}, small), AlgebraError);
}

TEST_CASE("malformed relations") {
  Quiver q(3);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 0, 2);
  CHECK_THROWS_WITH_AS(build_algebra(q, {monomial_relation({"a"})}), doctest::Contains("malformed relation"),
                       AlgebraError);
  const Relation mixed{{{Scalar(1), {"a", "b"}}, {Scalar(1), {"c", "c"}}}};
  CHECK_THROWS_WITH_AS(build_algebra(q, {mixed}), doctest::Contains("malformed relation"), AlgebraError);
  CHECK_THROWS_WITH_AS(build_algebra(q, {monomial_relation({"b", "a"})}), doctest::Contains("malformed relation"),
                       AlgebraError);
  CHECK_THROWS_AS(build_algebra(q, {monomial_relation({"a", "zz"})}), AlgebraError);
  CHECK_THROWS_AS(build_algebra(q, {Relation{}}), AlgebraError);
}

TEST_CASE("commutativity relation identifies the two long paths") {
  Quiver q(4);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 3);
  q.add_arrow("c", 0, 2);
  q.add_arrow("d", 2, 3);
  const AlgebraPtr alg = build_algebra(q, {{{{Scalar(1), {"a", "b"}}, {Scalar(-1), {"c", "d"}}}}});
  // 4 idempotents, 4 arrows, one class of length-2 paths from 1 to 4.
  CHECK(alg->dimension() == 9);
  const Path ab{0, 3, {0, 1}}, cd{0, 3, {2, 3}};
  CHECK(alg->reduce(ab) == alg->reduce(cd));
  CHECK(projective(alg, 0).dims() == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("example algebras are radical cube zero or better") {
  for (const AlgebraPtr& a : {two_arrows(), loop_then_arrow(), arrow_into_loop(), two_cycle()})
    CHECK(a->nilpotency_degree() <= 3);
}

TEST_CASE("projectives of the example algebras") {
  CHECK(projective(arrow_into_loop(), 0).dims() == std::vector<std::size_t>{1, 1});
  CHECK(projective(arrow_into_loop(), 1).dims() == std::vector<std::size_t>{0, 2});
  CHECK(projective(loop_then_arrow(), 0).dims() == std::vector<std::size_t>{2, 1});
  CHECK(projective(two_arrows(), 0).dims() == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("injectives of the example algebras") {
  const AlgebraPtr a = two_arrows();
  const Representation i2 = injective(a, 1);
  CHECK(i2.dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK(i2.map(0) == Matrix::from_rows({{1}}));
  CHECK(injective(a, 0) == simple(a, 0));

  const AlgebraPtr c = two_cycle();
  const Representation i1 = injective(c, 0);
  CHECK(i1.dims() == std::vector<std::size_t>{1, 1});
  // Top at vertex 2: the b-map is onto vertex 1, the a-map vanishes.
  CHECK(top(i1) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("simples") {
  const AlgebraPtr a = two_arrows();
  CHECK(simple(a, 0).dims() == std::vector<std::size_t>{1, 0, 0});
  CHECK(simple(a, 1) == projective(a, 1));
  CHECK(validate(simple(a, 2)).ok());
}

TEST_CASE("dimension of A is the sum of projective dimensions on the corpus") {
  for (const auto& e : corpus::all()) {
    std::size_t sum = 0, inj = 0;
    for (std::size_t v = 0; v < e.algebra->vertex_count(); ++v) {
      sum += total(projective(e.algebra, v).dims());
      inj += total(injective(e.algebra, v).dims());
      CHECK(validate(projective(e.algebra, v)).ok());
      CHECK(validate(injective(e.algebra, v)).ok());
      CHECK(validate(simple(e.algebra, v)).ok());
    }
    CHECK_MESSAGE(sum == e.algebra->dimension(), e.label);
    CHECK_MESSAGE(inj == e.algebra->dimension(), e.label);
  }
}

TEST_CASE("opposite and duality") {
  for (const auto& e : corpus::all()) {
    const AlgebraPtr op = opposite(*e.algebra);
    CHECK(op->dimension() == e.algebra->dimension());
    CHECK(opposite(*op)->dimension() == e.algebra->dimension());
    for (std::size_t v = 0; v < e.algebra->vertex_count(); ++v) {
      const Representation dp = dual_rep(projective(op, v), e.algebra);
      CHECK(validate(dp).ok());
      CHECK_MESSAGE(is_isomorphic(dp, injective(e.algebra, v)), e.label << " vertex " << v + 1);
    }
    for (const auto& m : e.modules) {
      const Representation back = dual_rep(dual_rep(m.module, op), e.algebra);
      CHECK(back == m.module);
    }
  }
}

TEST_CASE("standard names") {
  const auto p = parse_standard_name("P2", 3);
  REQUIRE(p);
  CHECK(p->kind == StandardKind::Projective);
  CHECK(p->vertex == 1);
  CHECK(parse_standard_name("I3", 3)->kind == StandardKind::Injective);
  CHECK_FALSE(parse_standard_name("S4", 3));
  CHECK_FALSE(parse_standard_name("S0", 3));
  CHECK_FALSE(parse_standard_name("X1", 3));
  CHECK_FALSE(parse_standard_name("P", 3));
}
