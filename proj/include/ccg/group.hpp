#pragma once
// Finite-group engine: groups given by an executable multiplication rule on
// element indices 0..N-1, with structural queries (center, centralizers,
// quotients) and small-order isomorphism testing.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccg {

using elem = std::uint32_t;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted, duplicate-free set of element indices.
struct ElementSet {
  std::vector<elem> members;

  std::size_t size() const { return members.size(); }
  bool contains(elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  bool operator==(const ElementSet&) const = default;
  bool operator<(const ElementSet& o) const {
    if (members.size() != o.members.size())
      return members.size() < o.members.size();
    return members < o.members;
  }

  static ElementSet from_unsorted(std::vector<elem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return ElementSet{std::move(v)};
  }
};

struct ValidationResult {
  bool ok = true;
  std::string reason;             // empty when ok
  std::array<elem, 3> triple{};   // failing (x, s, y) for associativity
};

using MulRule = std::function<elem(elem, elem)>;

// Light's associativity test: x*(s*y) == (x*s)*y for all x, y and s in a
// generating set. Sound and complete when `gens` generates the whole groupoid
// reachable under the rule; combined here with identity/inverse/closure checks.
inline ValidationResult validate_axioms(std::size_t n, const MulRule& mul,
                                        elem identity,
                                        const std::vector<elem>& gens) {
  ValidationResult r;
  if (identity >= n) {
    r.ok = false;
    r.reason = "identity index out of range";
    return r;
  }
  for (elem x = 0; x < n; ++x) {
    elem a = mul(identity, x), b = mul(x, identity);
    if (a >= n || b >= n) {
      r.ok = false;
      r.reason = "rule not closed";
      r.triple = {x, identity, x};
      return r;
    }
    if (a != x || b != x) {
      r.ok = false;
      r.reason = "claimed identity is not a two-sided identity";
      r.triple = {x, identity, x};
      return r;
    }
  }
  // Inverses: every row of the multiplication must reach the identity.
  for (elem x = 0; x < n; ++x) {
    bool found = false;
    for (elem y = 0; y < n && !found; ++y) {
      elem p = mul(x, y);
      if (p >= n) {
        r.ok = false;
        r.reason = "rule not closed";
        r.triple = {x, y, y};
        return r;
      }
      found = (p == identity);
    }
    if (!found) {
      r.ok = false;
      r.reason = "element has no right inverse";
      r.triple = {x, x, x};
      return r;
    }
  }
  for (elem s : gens) {
    if (s >= n) {
      r.ok = false;
      r.reason = "generator index out of range";
      return r;
    }
    for (elem x = 0; x < n; ++x) {
      elem xs = mul(x, s);
      for (elem y = 0; y < n; ++y) {
        if (mul(xs, y) != mul(x, mul(s, y))) {
          r.ok = false;
          r.reason = "associativity failure (Light's test)";
          r.triple = {x, s, y};
          return r;
        }
      }
    }
  }
  return r;
}

// Brute-force oracle: checks all N^3 triples. Test/diagnostic use only.
inline ValidationResult validate_axioms_full(std::size_t n, const MulRule& mul,
                                             elem identity) {
  std::vector<elem> all(n);
  std::iota(all.begin(), all.end(), elem{0});
  ValidationResult r = validate_axioms(n, mul, identity, all);
  return r;
}

// Immutable finite group. A dense multiplication table is materialized for
// order <= 4096; larger groups evaluate the rule on demand. Inverses and
// element orders are cached eagerly, so all queries after construction are
// pure and safe for concurrent use.
class Group {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  // `validated`: the caller certifies associativity (e.g. textbook
  // constructions); otherwise Light's test runs for orders <= kDenseLimit.
  Group(std::size_t n, MulRule rule, elem identity, std::vector<elem> gens,
        std::string name = "", bool validated = false)
      : n_(n),
        rule_(std::move(rule)),
        identity_(identity),
        gens_(std::move(gens)),
        name_(std::move(name)) {
    if (n_ == 0) throw error("group order must be positive");
    if (!validated && n_ <= kDenseLimit) {
      ValidationResult v = validate_axioms(n_, rule_, identity_, gens_);
      if (!v.ok) throw error("invalid group rule: " + v.reason);
    }
    if (n_ <= kDenseLimit) {
      table_.resize(n_ * n_);
      for (elem x = 0; x < n_; ++x)
        for (elem y = 0; y < n_; ++y)
          table_[x * n_ + y] = static_cast<std::uint16_t>(rule_(x, y));
    }
    // Orders and inverses from the power sequence x, x^2, ... of each element.
    // All caches (including the center) are filled here so that every query
    // after construction is read-only and safe for concurrent use.
    orders_.resize(n_);
    inverse_.resize(n_);
    for (elem x = 0; x < n_; ++x) {
      elem y = x;
      std::uint32_t k = 1;
      elem prev = identity_;
      while (y != identity_) {
        prev = y;
        y = mul(y, x);
        ++k;
        if (k > n_) throw error("power sequence does not reach identity");
      }
      orders_[x] = k;
      inverse_[x] = (k == 1) ? identity_ : prev;
    }
    if (gens_.empty()) gens_.push_back(identity_);
    {
      std::vector<elem> z;
      for (elem x = 0; x < n_; ++x) {
        bool central = true;
        for (elem s : gens_)
          if (!commute(x, s)) {
            central = false;
            break;
          }
        if (central) z.push_back(x);
      }
      center_ = ElementSet{std::move(z)};
    }
  }

  std::size_t order() const { return n_; }
  elem identity() const { return identity_; }
  const std::vector<elem>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  elem mul(elem x, elem y) const {
    if (x >= n_ || y >= n_) throw error("element index out of range");
    if (!table_.empty()) return table_[x * n_ + y];
    return rule_(x, y);
  }

  elem inverse(elem x) const {
    if (x >= n_) throw error("element index out of range");
    return inverse_[x];
  }

  std::uint32_t element_order(elem x) const {
    if (x >= n_) throw error("element index out of range");
    return orders_[x];
  }

  elem power(elem x, std::uint64_t k) const {
    elem acc = identity_, base = x;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  elem conjugate(elem x, elem g) const {  // g^-1 * x * g
    return mul(mul(inverse(g), x), g);
  }

  bool commute(elem x, elem y) const { return mul(x, y) == mul(y, x); }

  // Z(G): elements commuting with every generator (hence with all of G).
  const ElementSet& center() const { return center_; }

  ElementSet centralizer_of(elem x) const {
    std::vector<elem> c;
    for (elem y = 0; y < n_; ++y)
      if (commute(x, y)) c.push_back(y);
    return ElementSet{std::move(c)};
  }

  // Display label a^i b^j z^k (or family-specific); defaults to the index.
  std::string label(elem x) const {
    if (labeler_) return labeler_(x);
    return std::to_string(x);
  }
  void set_labeler(std::function<std::string(elem)> f) {
    labeler_ = std::move(f);
  }

 private:
  std::size_t n_;
  MulRule rule_;
  elem identity_;
  std::vector<elem> gens_;
  std::string name_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint32_t> orders_;
  std::vector<elem> inverse_;
  std::function<std::string(elem)> labeler_;
  ElementSet center_;
};

inline ElementSet subgroup_generated(const Group& g,
                                     const std::vector<elem>& gens) {
  if (gens.empty()) throw error("subgroup_generated: empty generating set");
  std::vector<char> seen(g.order(), 0);
  std::vector<elem> stack{g.identity()};
  seen[g.identity()] = 1;
  for (elem x : gens)
    if (!seen[x]) {
      seen[x] = 1;
      stack.push_back(x);
    }
  std::vector<elem> out;
  while (!stack.empty()) {
    elem x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (elem s : gens) {
      for (elem y : {g.mul(x, s), g.mul(x, g.inverse(s))})
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return ElementSet::from_unsorted(std::move(out));
}

inline bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.members.empty() || !s.contains(g.identity())) return false;
  for (elem x : s.members)
    for (elem y : s.members)
      if (!s.contains(g.mul(x, y))) return false;
  return true;
}

// Quotient of g by a central subgroup. Cosets are numbered in order of their
// least element; the coset of the identity is the quotient identity.
inline Group quotient_by_central(const Group& g, const ElementSet& n) {
  if (!is_subgroup(g, n)) throw error("quotient: not a subgroup");
  const ElementSet& z = g.center();
  for (elem x : n.members)
    if (!z.contains(x)) throw error("quotient: subgroup is not central");

  constexpr elem kUnset = ~elem{0};
  std::vector<elem> coset_of(g.order(), kUnset);
  std::vector<elem> reps;
  for (elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    elem id = static_cast<elem>(reps.size());
    reps.push_back(x);
    for (elem w : n.members) coset_of[g.mul(x, w)] = id;
  }
  std::size_t q = reps.size();
  if (q > Group::kDenseLimit)
    throw error("quotient: order exceeds dense-table bound");
  // Materialize the coset table now; the rule must not keep a reference to g.
  auto table = std::make_shared<std::vector<elem>>(q * q);
  for (elem a = 0; a < q; ++a)
    for (elem b = 0; b < q; ++b)
      (*table)[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  auto rule = [table, q](elem a, elem b) -> elem { return (*table)[a * q + b]; };
  std::vector<elem> gens;
  for (elem x : g.generators()) {
    elem c = coset_of[x];
    if (c != coset_of[g.identity()] &&
        std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  if (gens.empty()) gens.push_back(coset_of[g.identity()]);
  return Group(q, rule, coset_of[g.identity()], std::move(gens),
               g.name() + "/N", /*validated=*/true);
}

namespace detail {

// Per-element (order, conjugacy class size) fingerprints used to prune the
// isomorphism search, plus the multiset short-circuit.
inline std::vector<std::uint64_t> iso_fingerprint(const Group& g) {
  std::vector<std::uint32_t> class_size(g.order(), 0);
  std::vector<char> seen(g.order(), 0);
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
    for (elem m : orbit) class_size[m] = static_cast<std::uint32_t>(orbit.size());
  }
  std::vector<std::uint64_t> fp(g.order());
  for (elem x = 0; x < g.order(); ++x)
    fp[x] = (std::uint64_t(g.element_order(x)) << 32) | class_size[x];
  return fp;
}

}  // namespace detail

// Backtracking isomorphism search over images of g1's generators, pruned by
// (element order, class size) fingerprints. Deterministic: candidate images
// are tried in increasing index order and the first valid mapping is
// returned. Throws when either order exceeds `order_bound` or the search
// visits more than `node_budget` partial assignments — a budget overrun is a
// distinct failure, never reported as "not isomorphic".
inline std::optional<std::vector<elem>> isomorphic(
    const Group& g1, const Group& g2, std::size_t order_bound = 10000,
    std::uint64_t node_budget = 10'000'000) {
  if (g1.order() > order_bound || g2.order() > order_bound)
    throw error("isomorphic: order bound exceeded");
  if (g1.order() != g2.order()) return std::nullopt;
  const std::size_t n = g1.order();
  auto fp1 = detail::iso_fingerprint(g1);
  auto fp2 = detail::iso_fingerprint(g2);
  {
    auto s1 = fp1, s2 = fp2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  const std::vector<elem>& gens = g1.generators();
  constexpr elem kUnset = ~elem{0};

  // Extends the partial map determined by generator images by closing under
  // right multiplication; returns false on any conflict.
  auto extend = [&](const std::vector<elem>& imgs,
                    std::vector<elem>& phi) -> bool {
    std::fill(phi.begin(), phi.end(), kUnset);
    std::vector<char> used(n, 0);
    phi[g1.identity()] = g2.identity();
    used[g2.identity()] = 1;
    std::vector<elem> queue{g1.identity()};
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      elem ge = gens[i], im = imgs[i];
      if (phi[ge] == kUnset) {
        if (used[im]) return false;
        phi[ge] = im;
        used[im] = 1;
        queue.push_back(ge);
      } else if (phi[ge] != im) {
        return false;
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      elem x = queue[qi];
      for (std::size_t i = 0; i < imgs.size(); ++i) {
        elem y = g1.mul(x, gens[i]);
        elem fy = g2.mul(phi[x], imgs[i]);
        if (phi[y] == kUnset) {
          if (used[fy]) return false;
          if (fp1[y] != fp2[fy]) return false;
          phi[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    if (imgs.size() == gens.size() && queue.size() != n) return false;
    return true;
  };

  std::vector<elem> imgs;
  std::vector<elem> phi(n);
  std::uint64_t nodes = 0;
  std::function<bool()> bt = [&]() -> bool {
    if (imgs.size() == gens.size()) return extend(imgs, phi);
    elem ge = gens[imgs.size()];
    for (elem c = 0; c < n; ++c) {
      if (fp2[c] != fp1[ge]) continue;
      if (++nodes > node_budget) throw error("isomorphic: node budget exceeded");
      imgs.push_back(c);
      if (extend(imgs, phi) && bt()) return true;
      imgs.pop_back();
    }
    return false;
  };
  if (bt()) return imgs;
  return std::nullopt;
}

}  // namespace ccg
