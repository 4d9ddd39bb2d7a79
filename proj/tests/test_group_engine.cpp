#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ccg/group.hpp"
#include "ccg/presentations.hpp"
#include "helpers.hpp"

using namespace ccg;

TEST_CASE("cyclic groups: multiplication, orders, inverses") {
  Group c4 = cyclic(4);
  CHECK(c4.mul(1, 3) == 0);
  CHECK(c4.order() == 4);
  std::multiset<std::uint32_t> orders;
  for (elem x = 0; x < 4; ++x) orders.insert(c4.element_order(x));
  CHECK(orders == std::multiset<std::uint32_t>{1, 2, 4, 4});
  Group c1 = cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.identity() == 0);
  Group c9 = cyclic(9);
  CHECK(c9.element_order(3) == 3);
  for (elem x = 0; x < 9; ++x) CHECK(c9.mul(x, c9.inverse(x)) == 0);
}

TEST_CASE("validation accepts groups and rejects broken rules") {
  auto rule5 = [](elem x, elem y) -> elem { return (x + y) % 5; };
  CHECK(validate_axioms(5, rule5, 0, {1}).ok);
  CHECK(validate_axioms_full(5, rule5, 0).ok);

  // No identity at index 1.
  CHECK_FALSE(validate_axioms(5, rule5, 1, {1}).ok);

  // Subtraction is not associative.
  auto bad = [](elem x, elem y) -> elem { return (x + 5 - y) % 5; };
  ValidationResult v = validate_axioms_full(5, bad, 0);
  CHECK_FALSE(v.ok);

  // Not closed.
  auto escape = [](elem x, elem y) -> elem { return x + y; };
  CHECK_FALSE(validate_axioms(4, escape, 0, {1}).ok);
}

TEST_CASE("generator-based validation agrees with the cubic scan") {
  // Corrupt single cells of real multiplication tables and check that the
  // generator-based test and the full N^3 scan always return the same
  // verdict.
  std::mt19937 rng(777);
  for (std::uint32_t n : {6u, 8u, 12u}) {
    Group g = (n == 6) ? semidirect_cyclic(3, 2, 2)
                       : (n == 8 ? semidirect_cyclic(4, 2, 3) : cyclic(12));
    std::vector<elem> table(n * n);
    for (elem x = 0; x < n; ++x)
      for (elem y = 0; y < n; ++y) table[x * n + y] = g.mul(x, y);
    std::vector<elem> gens(n);
    std::iota(gens.begin(), gens.end(), elem{0});
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<elem> t = table;
      std::uniform_int_distribution<std::size_t> cell(0, n * n - 1);
      std::uniform_int_distribution<elem> val(0, n - 1);
      t[cell(rng)] = val(rng);
      auto rule = [&t, n](elem x, elem y) -> elem { return t[x * n + y]; };
      CHECK(validate_axioms(n, rule, g.identity(), gens).ok ==
            validate_axioms_full(n, rule, g.identity()).ok);
    }
  }
}

TEST_CASE("generator-based validation matches the cubic scan on an order-512 group") {
  Group g = heisenberg_mod(8);
  REQUIRE(g.order() == 512);
  auto rule = [&g](elem x, elem y) -> elem { return g.mul(x, y); };
  CHECK(validate_axioms(g.order(), rule, g.identity(), g.generators()).ok);
  CHECK(validate_axioms_full(g.order(), rule, g.identity()).ok);
}

TEST_CASE("power, conjugation, and commutation identities") {
  std::mt19937 rng(42);
  for (const Group& g : testing::small_catalog()) {
    std::uniform_int_distribution<elem> d(0, static_cast<elem>(g.order() - 1));
    for (int t = 0; t < 40; ++t) {
      elem x = d(rng), y = d(rng);
      CHECK(g.power(x, g.element_order(x)) == g.identity());
      CHECK(g.power(x, 5) == g.mul(g.power(x, 2), g.power(x, 3)));
      CHECK(g.mul(g.inverse(x), x) == g.identity());
      // Conjugation is an automorphism-style action.
      CHECK(g.conjugate(g.mul(x, y), d(rng)) !=
            static_cast<elem>(g.order()));  // in range
      elem c = d(rng);
      CHECK(g.conjugate(g.mul(x, y), c) ==
            g.mul(g.conjugate(x, c), g.conjugate(y, c)));
      CHECK(g.commute(x, y) == (g.mul(x, y) == g.mul(y, x)));
    }
  }
}

TEST_CASE("subgroups and centers") {
  Group c6 = cyclic(6);
  CHECK(subgroup_generated(c6, {2}).members == std::vector<elem>{0, 2, 4});
  CHECK(is_subgroup(c6, ElementSet{{0, 2, 4}}));
  CHECK_FALSE(is_subgroup(c6, ElementSet{{0, 2, 3}}));
  CHECK_FALSE(is_subgroup(c6, ElementSet{{2, 4}}));

  Group h4 = heisenberg_mod(4);
  CHECK(h4.center().size() == 4);
  for (elem z : h4.center().members)
    for (elem x = 0; x < h4.order(); ++x) CHECK(h4.commute(z, x));

  Group s3 = semidirect_cyclic(3, 2, 2);
  CHECK(s3.center().size() == 1);
}

TEST_CASE("central quotients") {
  Group h4 = heisenberg_mod(4);
  Group q = quotient_by_central(h4, h4.center());
  CHECK(q.order() == 16);
  Group z4z4 = direct_product(cyclic(4), cyclic(4));
  CHECK(isomorphic(q, z4z4).has_value());

  // Quotient by a non-central subgroup is rejected.
  Group s3 = semidirect_cyclic(3, 2, 2);
  CHECK_THROWS_AS(quotient_by_central(s3, subgroup_generated(s3, {s3.generators()[0]})),
                  error);
}

TEST_CASE("isomorphism testing: positives, negatives, and mapping validity") {
  CHECK_FALSE(isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  CHECK(isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3))).has_value());

  Group sd = semidirect_cyclic(9, 9, 4);
  Group L2 = make_L(3, 1);
  auto phi = isomorphic(sd, L2);
  REQUIRE(phi.has_value());
  CHECK(phi->size() == sd.generators().size());

  CHECK_FALSE(isomorphic(make_L(3, 0), make_L(3, 1)));
  CHECK_FALSE(isomorphic(semidirect_cyclic(3, 2, 2), cyclic(6)));

  CHECK_THROWS_AS(isomorphic(cyclic(3), cyclic(4), /*order_bound=*/2), error);
}

TEST_CASE("element sets order by size then content") {
  ElementSet a{{1, 2}}, b{{0, 1, 2}}, c{{1, 3}};
  CHECK(a < b);
  CHECK(a < c);
  CHECK(ElementSet::from_unsorted({3, 1, 1, 2}).members ==
        std::vector<elem>{1, 2, 3});
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(3));
}
