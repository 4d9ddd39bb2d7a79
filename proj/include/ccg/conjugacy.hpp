#pragma once
// Conjugacy class enumeration, class-size censuses, and Type-1..8 labeling
// for normal-form families.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ccg/group.hpp"
#include "ccg/presentations.hpp"

namespace ccg {

struct ConjugacyClass {
  elem representative = 0;            // least member
  ElementSet members;
  std::size_t size = 0;
  std::optional<int> type_label;      // 1..8 when family-labeled
};

struct CensusRow {
  int type_label;
  std::size_t class_size;
  std::size_t count;
  bool operator==(const CensusRow&) const = default;
};

struct ClassCensus {
  std::vector<CensusRow> rows;        // non-central classes only
  std::size_t total_classes = 0;      // sum of row counts
};

// Partition of all elements into conjugation orbits (BFS closure under
// conjugation by generators only), sorted by (size, representative).
inline std::vector<ConjugacyClass> conjugacy_classes(
    const Group& g, std::size_t order_bound = 20000) {
  if (g.order() > order_bound)
    throw error("conjugacy_classes: order bound exceeded");
  std::vector<char> seen(g.order(), 0);
  std::vector<ConjugacyClass> out;
  for (elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<elem> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (elem s : g.generators()) {
        elem y = g.conjugate(orbit[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    ConjugacyClass c;
    c.members = ElementSet::from_unsorted(std::move(orbit));
    c.size = c.members.size();
    c.representative = c.members.members.front();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              return std::pair(a.size, a.representative) <
                     std::pair(b.size, b.representative);
            });
  return out;
}

// Aggregate (class size -> number of classes), central singletons included.
inline std::map<std::size_t, std::size_t> class_size_histogram(
    const Group& g, std::size_t order_bound = 20000) {
  std::map<std::size_t, std::size_t> h;
  for (const ConjugacyClass& c : conjugacy_classes(g, order_bound))
    ++h[c.size];
  return h;
}

// The predicted non-central class census for a family descriptor: the 8-row
// table in the abelian-quotient case and the 7-row table (Type 7 merged into
// Type 4) in the non-abelian case.
inline ClassCensus predicted_census(const FamilyDescriptor& d) {
  std::uint64_t p = d.p, n = d.n;
  std::uint64_t p2 = p * p;
  ClassCensus c;
  auto row = [&](int t, std::uint64_t size, std::uint64_t count) {
    c.rows.push_back(CensusRow{t, static_cast<std::size_t>(size),
                               static_cast<std::size_t>(count)});
    c.total_classes += static_cast<std::size_t>(count);
  };
  if (d.quotient_kind == QuotientKind::abelian) {
    if (!d.m_coef)
      throw error("predicted_census: abelian case requires p^2 | |Z|");
    std::uint64_t m = *d.m_coef;
    row(1, p, n * (p - 1));
    row(2, p2, m * p * (p - 1));
    row(3, p, n * (p - 1));
    row(4, p2, m * p * (p - 1));
    row(5, p, n * (p - 1) * (p - 1));
    row(6, p2, m * p * (p - 1) * (p - 1));
    row(7, p2, m * p * (p - 1) * (p - 1));
    row(8, p2, m * p2 * (p - 1) * (p - 1));
  } else {
    row(1, p, n * (p - 1));
    row(2, p2, n * (p - 1));
    row(3, p, n * (p - 1));
    row(4, p2, n * p * (p - 1));  // Types 4 and 7 coincide class-wise
    row(5, p, n * (p - 1) * (p - 1));
    row(6, p2, n * (p - 1) * (p - 1));
    row(8, p2, n * p * (p - 1) * (p - 1));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Type labeling

// How to read normal-form exponents (i, j) mod p^2 off an element of a
// family-constructed group.
struct FamilyShape {
  std::uint32_t p = 0;
  QuotientKind kind = QuotientKind::abelian;
  std::function<std::pair<std::uint32_t, std::uint32_t>(elem)> exponents;
};

inline FamilyShape family_shape_extension(const ExtensionParams& e) {
  std::uint32_t p2 = e.p * e.p, m = e.m;
  return FamilyShape{
      e.p, e.r == 1 ? QuotientKind::nonabelian : QuotientKind::abelian,
      [p2, m](elem x) {
        NormalForm nf = decode_normal_form(x, p2, m);
        return std::pair(nf.i, nf.j);
      }};
}

inline FamilyShape family_shape_heisenberg(std::uint32_t q, std::uint32_t p) {
  if (p * p != q)
    throw error("family_shape_heisenberg: q must equal p^2 for type labeling");
  return FamilyShape{p, QuotientKind::abelian, [q](elem x) {
                       return std::pair(x / (q * q), (x / q) % q);
                     }};
}

// Element-level Type 1..8 from the (i mod p, j mod p, i=0, j=0) pattern;
// 0 marks a central pattern (i = j = 0).
inline int element_type(std::uint32_t p, std::uint32_t i, std::uint32_t j) {
  bool ip = (i % p == 0), jp = (j % p == 0);
  if (j == 0) {
    if (i == 0) return 0;
    return ip ? 1 : 2;
  }
  if (i == 0) return jp ? 3 : 4;
  if (ip && jp) return 5;
  if (!ip && jp) return 6;
  if (ip && !jp) return 7;
  return 8;
}

// Labels every non-central class 1..8 from its members' normal forms. In the
// non-abelian case conjugation shifts the a-exponent by multiples of p, which
// fuses the Type 4 and Type 7 patterns inside single classes; those classes
// are labeled 4. Throws if a label is not constant on a class after that
// merge (signals a construction bug). Output is census order (type, size,
// representative).
inline std::vector<ConjugacyClass> label_types(
    const Group& g, const FamilyShape& shape,
    std::size_t order_bound = 20000) {
  std::vector<ConjugacyClass> classes = conjugacy_classes(g, order_bound);
  const ElementSet& z = g.center();
  std::vector<ConjugacyClass> out;
  for (ConjugacyClass& c : classes) {
    if (z.contains(c.representative)) continue;  // central: no type label
    int label = -1;
    for (elem x : c.members.members) {
      auto [i, j] = shape.exponents(x);
      int t = element_type(shape.p, i, j);
      if (shape.kind == QuotientKind::nonabelian && t == 7) t = 4;
      if (label == -1)
        label = t;
      else if (label != t)
        throw error("label_types: type not constant on a conjugacy class");
    }
    c.type_label = label;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              return std::tuple(*a.type_label, a.size, a.representative) <
                     std::tuple(*b.type_label, b.size, b.representative);
            });
  return out;
}

// (type, size, count) aggregation of labeled classes, for Table comparison.
inline ClassCensus census_of(const std::vector<ConjugacyClass>& labeled) {
  std::map<std::pair<int, std::size_t>, std::size_t> agg;
  for (const ConjugacyClass& c : labeled)
    ++agg[{c.type_label.value_or(-1), c.size}];
  ClassCensus out;
  for (const auto& [key, count] : agg) {
    out.rows.push_back(CensusRow{key.first, key.second, count});
    out.total_classes += count;
  }
  return out;
}

inline bool census_match(const ClassCensus& a, const ClassCensus& b) {
  auto key = [](const ClassCensus& c) {
    std::map<std::pair<int, std::size_t>, std::size_t> m;
    for (const CensusRow& r : c.rows) m[{r.type_label, r.class_size}] += r.count;
    return m;
  };
  return key(a) == key(b);
}

}  // namespace ccg
