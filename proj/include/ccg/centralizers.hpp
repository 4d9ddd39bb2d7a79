#pragma once
// Cent(G): the set of distinct element centralizers, its cardinality, and the
// inclusion structure among proper centralizers.

#include <cstdint>
#include <map>
#include <vector>

#include "ccg/group.hpp"

namespace ccg {

struct CentReport {
  // Whole group first, then proper centralizers sorted by (size, members).
  std::vector<ElementSet> distinct;
  std::size_t count = 0;                        // |Cent(G)|
  std::map<std::size_t, std::size_t> orders;    // size -> multiplicity
  std::vector<elem> witnesses;                  // one element per centralizer
};

// Deduplicated centralizers of all elements. Elements in the same coset of
// the center have identical centralizers (x and xz commute with the same
// elements when z is central), so only one scan per central coset is needed;
// this shortcut is oracle-checked against the per-element scan in the tests.
inline CentReport distinct_centralizers(const Group& g,
                                        std::size_t order_bound = 20000) {
  if (g.order() > order_bound)
    throw error("distinct_centralizers: order bound exceeded");
  const ElementSet& z = g.center();
  std::vector<char> coset_seen(g.order(), 0);
  std::map<ElementSet, elem> seen;  // centralizer -> first witness
  for (elem x = 0; x < g.order(); ++x) {
    if (coset_seen[x]) continue;
    for (elem w : z.members) coset_seen[g.mul(x, w)] = 1;
    ElementSet c = g.centralizer_of(x);
    seen.emplace(std::move(c), x);
  }
  CentReport r;
  r.count = seen.size();
  // Whole group (= centralizer of the identity) first, then by (size, members)
  // which is exactly ElementSet's ordering; std::map already yields that.
  for (const auto& [c, w] : seen) {
    if (c.size() == g.order()) {
      r.distinct.insert(r.distinct.begin(), c);
      r.witnesses.insert(r.witnesses.begin(), w);
    } else {
      r.distinct.push_back(c);
      r.witnesses.push_back(w);
    }
    ++r.orders[c.size()];
  }
  return r;
}

inline std::size_t cent_count(const Group& g,
                              std::size_t order_bound = 20000) {
  return distinct_centralizers(g, order_bound).count;
}

// Predicted |Cent(G)| when G/Z(G) is Z_{p^2} x Z_{p^2} or Z_{p^2} : Z_{p^2}.
inline std::uint64_t predicted_cent_count(std::uint32_t p) {
  return static_cast<std::uint64_t>(p + 1) * (p + 1) + 1;
}

// Conjectured |Cent(G)| = (p+1)^n + 1 when G/Z(G) is Z_{p^n} : Z_{p^n}.
inline std::uint64_t predicted_cent_count_conjecture(std::uint32_t p,
                                                     std::uint32_t n) {
  std::uint64_t v = 1;
  for (std::uint32_t k = 0; k < n; ++k) v *= (p + 1);
  return v + 1;
}

// All ordered pairs (u, v), u != v, with distinct[u] a strict subset of
// distinct[v].
inline std::vector<std::pair<std::size_t, std::size_t>> centralizer_inclusions(
    const CentReport& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < r.distinct.size(); ++u)
    for (std::size_t v = 0; v < r.distinct.size(); ++v) {
      if (u == v || r.distinct[u].size() >= r.distinct[v].size()) continue;
      bool sub = true;
      for (elem x : r.distinct[u].members)
        if (!r.distinct[v].contains(x)) {
          sub = false;
          break;
        }
      if (sub) out.emplace_back(u, v);
    }
  return out;
}

}  // namespace ccg
