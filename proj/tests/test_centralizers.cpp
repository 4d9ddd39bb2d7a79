#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ccg/centralizers.hpp"
#include "ccg/presentations.hpp"
#include "helpers.hpp"

using namespace ccg;

namespace {

// Per-element scan with no coset shortcut; oracle for distinct_centralizers.
std::set<ElementSet> naive_distinct(const Group& g) {
  std::set<ElementSet> out;
  for (elem x = 0; x < g.order(); ++x) out.insert(g.centralizer_of(x));
  return out;
}

std::map<std::size_t, std::size_t> golden_orders(
    std::initializer_list<std::pair<std::size_t, std::size_t>> kv) {
  return {kv.begin(), kv.end()};
}

}  // namespace

TEST_CASE("coset-deduplicated scan equals the per-element scan") {
  for (const Group& g : testing::small_catalog()) {
    CentReport r = distinct_centralizers(g);
    std::set<ElementSet> naive = naive_distinct(g);
    CHECK(r.count == naive.size());
    std::set<ElementSet> mine(r.distinct.begin(), r.distinct.end());
    CHECK(mine == naive);
  }
}

TEST_CASE("frozen centralizer censuses") {
  struct Row {
    Group g;
    std::size_t count;
    std::map<std::size_t, std::size_t> orders;
  };
  std::vector<Row> rows;
  rows.push_back({heisenberg_mod(3), 5, golden_orders({{9, 4}, {27, 1}})});
  rows.push_back(
      {heisenberg_mod(4), 10, golden_orders({{16, 6}, {32, 3}, {64, 1}})});
  rows.push_back(
      {heisenberg_mod(9), 17, golden_orders({{81, 12}, {243, 4}, {729, 1}})});
  rows.push_back({make_L(3, 1), 5, golden_orders({{27, 4}, {81, 1}})});
  rows.push_back({make_L(3, 0), 1, golden_orders({{81, 1}})});
  rows.push_back({make_L(2, 1), 4, golden_orders({{8, 3}, {16, 1}})});
  rows.push_back({testing::exemplar243(), 17,
                  golden_orders({{27, 12}, {81, 4}, {243, 1}})});
  for (const Row& row : rows) {
    CAPTURE(row.g.name());
    CentReport r = distinct_centralizers(row.g);
    CHECK(r.count == row.count);
    CHECK(r.orders == row.orders);
  }
}

TEST_CASE("report structure: whole group first, witnesses consistent") {
  Group g = heisenberg_mod(4);
  CentReport r = distinct_centralizers(g);
  REQUIRE(!r.distinct.empty());
  CHECK(r.distinct[0].size() == g.order());
  for (std::size_t i = 1; i + 1 < r.distinct.size(); ++i)
    CHECK_FALSE(r.distinct[i + 1] < r.distinct[i]);
  REQUIRE(r.witnesses.size() == r.distinct.size());
  for (std::size_t i = 0; i < r.distinct.size(); ++i)
    CHECK(g.centralizer_of(r.witnesses[i]) == r.distinct[i]);
}

TEST_CASE("predicted counts") {
  CHECK(predicted_cent_count(2) == 10);
  CHECK(predicted_cent_count(3) == 17);
  CHECK(predicted_cent_count(5) == 37);
  CHECK(predicted_cent_count_conjecture(2, 1) == 4);
  CHECK(predicted_cent_count_conjecture(3, 1) == 5);
  CHECK(predicted_cent_count_conjecture(3, 2) == 17);
  CHECK(predicted_cent_count_conjecture(5, 3) == 217);
}

TEST_CASE("centralizers of cosets of the center coincide") {
  for (const Group& g : {heisenberg_mod(4), testing::exemplar243()}) {
    for (elem x = 0; x < g.order(); x += 7)
      for (elem z : g.center().members)
        CHECK(g.centralizer_of(x) == g.centralizer_of(g.mul(x, z)));
  }
}

TEST_CASE("inclusion structure among proper centralizers") {
  Group g = heisenberg_mod(9);
  CentReport r = distinct_centralizers(g);
  auto incl = centralizer_inclusions(r);
  CHECK(!incl.empty());
  for (auto [u, v] : incl) {
    CHECK(r.distinct[u].size() < r.distinct[v].size());
    for (elem x : r.distinct[u].members) CHECK(r.distinct[v].contains(x));
  }
  // Every smallest-size centralizer sits inside some mid-size one.
  std::size_t small = 81, mid = 243;
  for (std::size_t u = 0; u < r.distinct.size(); ++u) {
    if (r.distinct[u].size() != small) continue;
    bool found = false;
    for (auto [a, b] : incl)
      if (a == u && r.distinct[b].size() == mid) found = true;
    CHECK(found);
  }
}

TEST_CASE("abelian groups have a single centralizer") {
  CHECK(cent_count(cyclic(12)) == 1);
  CHECK(cent_count(direct_product(cyclic(4), cyclic(4))) == 1);
}
