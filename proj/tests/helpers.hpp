#pragma once
// Shared fixtures for the test suites: the small-group catalog and graph
// census helpers.

#include <map>
#include <utility>
#include <vector>

#include "ccg/cccgraph.hpp"
#include "ccg/joingraphs.hpp"
#include "ccg/presentations.hpp"

namespace ccg::testing {

// The order-243 group with |Z| = 3 and non-abelian central quotient used as
// the main exemplar throughout.
inline Group exemplar243() { return central_extension({3, 1, 3, 1, 0, 0}); }

// The order-3125 analogue at p = 5.
inline Group exemplar3125() { return central_extension({5, 1, 5, 1, 0, 0}); }

// Closed-twin part census of a graph: (part size, quotient degree) -> count.
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> parts_census(
    const SimpleGraph& g) {
  DecomposedJoin d = decompose_join_full(g);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    ++out[{d.spec.part_sizes[i], d.spec.quotient.degree(i)}];
  return out;
}

// (element order -> multiplicity) of a group.
inline std::map<std::uint32_t, std::size_t> order_multiset(const Group& g) {
  std::map<std::uint32_t, std::size_t> out;
  for (elem x = 0; x < g.order(); ++x) ++out[g.element_order(x)];
  return out;
}

// Small catalog (orders <= 256) for oracle-equivalence sweeps.
inline std::vector<Group> small_catalog() {
  std::vector<Group> out;
  out.push_back(cyclic(12));
  out.push_back(semidirect_cyclic(3, 2, 2));  // S3
  out.push_back(heisenberg_mod(3));
  out.push_back(heisenberg_mod(4));
  out.push_back(make_L(2, 0));
  out.push_back(make_L(2, 1));
  out.push_back(make_L(3, 1));
  out.push_back(exemplar243());
  return out;
}

}  // namespace ccg::testing
