#pragma once
// Constructors for the concrete group families: cyclic building blocks,
// direct/semidirect products, the order-p^4 groups L1/L2, Heisenberg-style
// groups mod q, and a parameterized central-extension family with search.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccg/group.hpp"

namespace ccg {

// ---------------------------------------------------------------------------
// Domain types

struct NormalForm {
  std::uint32_t i = 0;  // exponent of a, mod p^2
  std::uint32_t j = 0;  // exponent of b, mod p^2
  std::uint32_t k = 0;  // exponent of the central generator z, mod m
  bool operator==(const NormalForm&) const = default;
};

struct ExtensionParams {
  std::uint32_t p = 3;      // prime
  std::uint32_t r = 0;      // 0: abelian quotient target, 1: non-abelian
  std::uint32_t m = 1;      // order of the central generator z
  std::uint32_t alpha = 0;  // a^{p^2} = z^alpha
  std::uint32_t beta = 0;   // b^{p^2} = z^beta
  std::uint32_t gamma = 0;  // b*a = a^{rp+1}*b*z^gamma
  bool operator==(const ExtensionParams&) const = default;
};

enum class QuotientKind { abelian, nonabelian };

struct FamilyDescriptor {
  std::uint32_t p = 0;
  std::uint32_t z_order = 0;
  std::uint32_t n = 0;                     // |Z| / p
  std::optional<std::uint32_t> m_coef;     // |Z| / p^2 when p^2 divides |Z|
  QuotientKind quotient_kind = QuotientKind::abelian;
};

inline FamilyDescriptor make_descriptor(std::uint32_t p, std::uint32_t z_order,
                                        QuotientKind kind) {
  if (p == 0 || z_order % p != 0)
    throw error("family descriptor: p must divide |Z|");
  FamilyDescriptor d;
  d.p = p;
  d.z_order = z_order;
  d.n = z_order / p;
  if (z_order % (p * p) == 0) d.m_coef = z_order / (p * p);
  d.quotient_kind = kind;
  return d;
}

// ---------------------------------------------------------------------------
// Elementary constructions

inline Group cyclic(std::uint32_t n) {
  if (n == 0) throw error("cyclic: order must be positive");
  auto rule = [n](elem x, elem y) -> elem { return (x + y) % n; };
  std::vector<elem> gens;
  if (n > 1) gens.push_back(1);
  return Group(n, rule, 0, std::move(gens), "Z" + std::to_string(n),
               /*validated=*/true);
}

inline Group direct_product(const Group& g1, const Group& g2,
                            std::size_t order_bound = 20000) {
  std::size_t n1 = g1.order(), n2 = g2.order();
  if (n1 * n2 > order_bound) throw error("direct_product: order bound exceeded");
  // Materialize both factors' tables into the closure to keep it self-contained.
  auto t = std::make_shared<std::pair<Group, Group>>(g1, g2);
  auto rule = [t, n2](elem x, elem y) -> elem {
    elem x1 = x / n2, x2 = x % n2, y1 = y / n2, y2 = y % n2;
    return t->first.mul(x1, y1) * static_cast<elem>(n2) +
           t->second.mul(x2, y2);
  };
  std::vector<elem> gens;
  for (elem g : g1.generators())
    if (g != g1.identity()) gens.push_back(g * n2 + g2.identity());
  for (elem g : g2.generators())
    if (g != g2.identity()) gens.push_back(g1.identity() * n2 + g);
  elem id = g1.identity() * static_cast<elem>(n2) + g2.identity();
  return Group(n1 * n2, rule, id, std::move(gens),
               g1.name() + "x" + g2.name(), /*validated=*/true);
}

// Z_nN ⋊ Z_nH with h x h^{-1} = x^t for the canonical generators.
// Elements are x^i h^j indexed as i*nH + j.
inline Group semidirect_cyclic(std::uint32_t nN, std::uint32_t nH,
                               std::uint32_t t) {
  if (nN == 0 || nH == 0) throw error("semidirect_cyclic: orders must be positive");
  if (std::gcd(t, nN) != 1)
    throw error("semidirect_cyclic: action not invertible (gcd(t,nN) != 1)");
  // Powers of t mod nN; the action must have order dividing nH.
  std::vector<std::uint64_t> tp(nH + 1);
  tp[0] = 1 % nN;
  for (std::uint32_t j = 1; j <= nH; ++j) tp[j] = (tp[j - 1] * t) % nN;
  if (tp[nH] != 1 % nN)
    throw error("semidirect_cyclic: t^nH != 1 (mod nN), action ill-defined");
  auto rule = [nN, nH, tp](elem x, elem y) -> elem {
    elem i1 = x / nH, j1 = x % nH, i2 = y / nH, j2 = y % nH;
    elem i = static_cast<elem>((i1 + i2 * tp[j1]) % nN);
    elem j = (j1 + j2) % nH;
    return i * nH + j;
  };
  std::vector<elem> gens;
  if (nN > 1) gens.push_back(1 * nH + 0);
  if (nH > 1) gens.push_back(0 * nH + 1);
  return Group(static_cast<std::size_t>(nN) * nH, rule, 0, std::move(gens),
               "Z" + std::to_string(nN) + ":Z" + std::to_string(nH),
               /*validated=*/true);
}

// ---------------------------------------------------------------------------
// Central extensions by collection

namespace detail {

struct CollectionTables {
  std::uint32_t p, p2, m, mod;
  std::vector<std::uint64_t> Q;  // (1+rp)^j mod p^2*m, j < p^2
  std::vector<std::uint64_t> S;  // sum_{t<j} (1+rp)^t mod m
};

inline CollectionTables collection_tables(const ExtensionParams& e) {
  CollectionTables t;
  t.p = e.p;
  t.p2 = e.p * e.p;
  t.m = e.m;
  t.mod = t.p2 * t.m;
  std::uint64_t q = (1 + static_cast<std::uint64_t>(e.r) * e.p) % t.mod;
  t.Q.assign(t.p2, 1 % t.mod);
  for (std::uint32_t j = 1; j < t.p2; ++j) t.Q[j] = (t.Q[j - 1] * q) % t.mod;
  t.S.assign(t.p2, 0);
  for (std::uint32_t j = 1; j < t.p2; ++j)
    t.S[j] = (t.S[j - 1] + t.Q[j - 1]) % t.m;
  return t;
}

}  // namespace detail

inline elem encode_normal_form(const NormalForm& nf, std::uint32_t p2,
                               std::uint32_t m) {
  return (nf.i * p2 + nf.j) * m + nf.k;
}

inline NormalForm decode_normal_form(elem x, std::uint32_t p2,
                                     std::uint32_t m) {
  return NormalForm{x / (p2 * m), (x / m) % p2, x % m};
}

// Multiplication of normal forms a^i b^j z^k by collection: b^{j1} a^{i2} is
// rewritten to a^E b^{j1} z^{gamma*i2*S(j1)} with E = i2*(1+rp)^{j1} computed
// mod p^2*m so the overflow carry a^{p^2} = z^alpha is well defined; the
// b-exponent carry uses beta identically.
struct CollectionMul {
  std::shared_ptr<const detail::CollectionTables> t;
  std::uint64_t alpha, beta, gamma;

  elem operator()(elem x, elem y) const {
    const auto& c = *t;
    NormalForm u = decode_normal_form(x, c.p2, c.m);
    NormalForm v = decode_normal_form(y, c.p2, c.m);
    std::uint64_t E = (u.i + v.i * c.Q[u.j]) % c.mod;
    std::uint32_t i = static_cast<std::uint32_t>(E % c.p2);
    std::uint64_t carry_a = (alpha * (E / c.p2)) % c.m;
    std::uint32_t B = u.j + v.j;
    std::uint32_t j = B % c.p2;
    std::uint64_t carry_b = (beta * (B / c.p2)) % c.m;
    std::uint64_t k =
        (u.k + v.k + gamma * v.i % c.m * c.S[u.j] + carry_a + carry_b) % c.m;
    return encode_normal_form({i, j, static_cast<std::uint32_t>(k)}, c.p2, c.m);
  }
};

inline CollectionMul collection_mul(const ExtensionParams& e) {
  return CollectionMul{
      std::make_shared<const detail::CollectionTables>(
          detail::collection_tables(e)),
      e.alpha, e.beta, e.gamma};
}

inline MulRule collection_rule(const ExtensionParams& e) {
  return collection_mul(e);
}

inline std::string extension_name(const ExtensionParams& e) {
  std::ostringstream os;
  os << "ce:p=" << e.p << ",r=" << e.r << ",m=" << e.m << ",a=" << e.alpha
     << ",b=" << e.beta << ",g=" << e.gamma;
  return os.str();
}

namespace detail {

inline void attach_family_labels(Group& g, std::uint32_t p2, std::uint32_t m) {
  g.set_labeler([p2, m](elem x) {
    NormalForm nf = decode_normal_form(x, p2, m);
    std::ostringstream os;
    os << "a^" << nf.i << " b^" << nf.j;
    if (m > 1) os << " z^" << nf.k;
    return os.str();
  });
}

}  // namespace detail

// Validation result paired with the group when consistent; used by the search.
inline std::pair<std::optional<Group>, ValidationResult> try_central_extension(
    const ExtensionParams& e, std::size_t order_bound = 30000) {
  if (e.p < 2) throw error("central_extension: p must be prime");
  if (e.m == 0) throw error("central_extension: m must be positive");
  std::uint32_t p2 = e.p * e.p;
  if (static_cast<std::size_t>(p2) * e.m > order_bound)
    throw error("central_extension: p^2*m exceeds bound");
  std::size_t n = static_cast<std::size_t>(p2) * p2 * e.m;
  CollectionMul mul = collection_mul(e);
  MulRule rule;
  if (n <= Group::kDenseLimit) {
    // Materialize once so the validation pass does table lookups instead of
    // re-running the collection arithmetic n^2 times.
    auto table = std::make_shared<std::vector<elem>>(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        (*table)[x * n + y] =
            mul(static_cast<elem>(x), static_cast<elem>(y));
    rule = [table, n](elem x, elem y) -> elem { return (*table)[x * n + y]; };
  } else {
    rule = mul;
  }
  std::vector<elem> gens{encode_normal_form({1, 0, 0}, p2, e.m),
                         encode_normal_form({0, 1, 0}, p2, e.m)};
  if (e.m > 1) gens.push_back(encode_normal_form({0, 0, 1}, p2, e.m));
  ValidationResult v = validate_axioms(n, rule, 0, gens);
  if (!v.ok) return {std::nullopt, v};
  Group g(n, rule, 0, gens, extension_name(e), /*validated=*/true);
  detail::attach_family_labels(g, p2, e.m);
  return {std::move(g), v};
}

inline Group central_extension(const ExtensionParams& e,
                               std::size_t order_bound = 30000) {
  auto [g, v] = try_central_extension(e, order_bound);
  if (!g) {
    std::ostringstream os;
    os << "central_extension " << extension_name(e)
       << " inconsistent: " << v.reason << " at (" << v.triple[0] << ","
       << v.triple[1] << "," << v.triple[2] << ")";
    throw error(os.str());
  }
  return std::move(*g);
}

// L(p, r) = <x, y | x^{p^2} = y^{p^2} = 1, yx = x^{rp+1}y>, order p^4.
inline Group make_L(std::uint32_t p, std::uint32_t r) {
  if (r > 1) throw error("make_L: r must be 0 or 1");
  Group g = central_extension({p, r, 1, 0, 0, 0});
  // Name it as an L-family group rather than a degenerate extension.
  Group named(g.order(), [gp = std::make_shared<Group>(g)](elem x, elem y) {
                return gp->mul(x, y);
              },
              g.identity(), g.generators(),
              "L:p=" + std::to_string(p) + ",r=" + std::to_string(r),
              /*validated=*/true);
  detail::attach_family_labels(named, p * p, 1);
  return named;
}

// Heisenberg-style group mod q: triples (i,j,k) in Z_q^3 with
// (i1,j1,k1)*(i2,j2,k2) = (i1+i2, j1+j2, k1+k2+j1*i2). Center = {(0,0,k)}.
inline Group heisenberg_mod(std::uint32_t q) {
  if (q < 2 || q > 128) throw error("heisenberg_mod: q out of range [2,128]");
  auto rule = [q](elem x, elem y) -> elem {
    elem i1 = x / (q * q), j1 = (x / q) % q, k1 = x % q;
    elem i2 = y / (q * q), j2 = (y / q) % q, k2 = y % q;
    return ((i1 + i2) % q) * q * q + ((j1 + j2) % q) * q +
           (k1 + k2 + j1 * i2 % q) % q;
  };
  std::vector<elem> gens{1 * q * q, 1 * q};  // a = (1,0,0), b = (0,1,0)
  Group g(static_cast<std::size_t>(q) * q * q, rule, 0, std::move(gens),
          "heis:q=" + std::to_string(q), /*validated=*/true);
  g.set_labeler([q](elem x) {
    std::ostringstream os;
    os << "a^" << x / (q * q) << " b^" << (x / q) % q << " z^" << x % q;
    return os.str();
  });
  return g;
}

// Lemma-style order formula for x^i y^j in L(p, r), i, j mod p^2:
// 1 iff i=j=0; p if p divides both (not both zero); p^2 otherwise.
inline std::uint32_t order_formula(std::uint32_t p, std::uint32_t i,
                                   std::uint32_t j) {
  std::uint32_t p2 = p * p;
  i %= p2;
  j %= p2;
  if (i == 0 && j == 0) return 1;
  if (i % p == 0 && j % p == 0) return p;
  return p2;
}

// ---------------------------------------------------------------------------
// Extension search

struct SearchHit {
  ExtensionParams params;
  Group group;
  FamilyDescriptor descriptor;
};

namespace detail {

// Cheap rejection before the full Light's test: spot-check associativity and
// the identity law on a fixed pseudo-random triple sample (deterministic).
inline bool assoc_spot_check(std::size_t n, const MulRule& mul,
                             std::size_t samples = 200) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<elem> d(0, static_cast<elem>(n - 1));
  for (std::size_t s = 0; s < samples; ++s) {
    elem x = d(rng), y = d(rng), z = d(rng);
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
    if (mul(0, x) != x || mul(x, 0) != x) return false;
  }
  return true;
}

}  // namespace detail

// Enumerates (alpha, beta, gamma) in Z_m^3 for each requested |Z| = m in
// lexicographic (m, alpha, beta, gamma) order; keeps parameter sets that give
// a consistent group whose center has order exactly m and whose central
// quotient is isomorphic to L(p, r). The returned list is deduplicated up to
// isomorphism, keeping the first representative of each type.
inline std::vector<SearchHit> search_extensions(
    std::uint32_t p, std::uint32_t r, const std::vector<std::uint32_t>& z_orders,
    std::size_t order_bound = 30000) {
  std::vector<SearchHit> hits;
  Group L = make_L(p, r);
  QuotientKind kind =
      (r == 1) ? QuotientKind::nonabelian : QuotientKind::abelian;
  for (std::uint32_t m : z_orders) {
    std::uint32_t p2 = p * p;
    if (static_cast<std::size_t>(p2) * m > order_bound)
      throw error("search_extensions: p^2*m exceeds bound");
    std::size_t n = static_cast<std::size_t>(p2) * p2 * m;
    for (std::uint32_t alpha = 0; alpha < m; ++alpha)
      for (std::uint32_t beta = 0; beta < m; ++beta)
        for (std::uint32_t gamma = 0; gamma < m; ++gamma) {
          ExtensionParams e{p, r, m, alpha, beta, gamma};
          MulRule rule = collection_rule(e);
          if (!detail::assoc_spot_check(n, rule)) continue;
          auto [g, v] = try_central_extension(e, order_bound);
          if (!g) continue;
          if (g->center().size() != m) continue;
          Group q = quotient_by_central(*g, g->center());
          if (!isomorphic(q, L)) continue;
          bool dup = false;
          for (const SearchHit& h : hits)
            if (isomorphic(h.group, *g)) {
              dup = true;
              break;
            }
          if (dup) continue;
          hits.push_back(SearchHit{e, std::move(*g), make_descriptor(p, m, kind)});
        }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Family descriptor strings ("L:p=3,r=1" | "heis:q=9" | "ce:..." | "search:...")

namespace detail {

inline std::map<std::string, std::uint32_t> parse_kv(const std::string& s) {
  std::map<std::string, std::uint32_t> kv;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw error("family spec: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    try {
      kv[key] = static_cast<std::uint32_t>(std::stoul(val));
    } catch (const std::exception&) {
      throw error("family spec: bad integer '" + val + "'");
    }
  }
  return kv;
}

inline std::uint32_t need(const std::map<std::string, std::uint32_t>& kv,
                          const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw error("family spec: missing key '" + key + "'");
  return it->second;
}

}  // namespace detail

// Builds the group named by a family spec string. "search:p=..,r=..,m=a,b"
// returns the first search hit.
inline Group build_family(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw error("family spec: expected 'kind:key=value,...'");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "L") {
    auto kv = detail::parse_kv(rest);
    return make_L(detail::need(kv, "p"), detail::need(kv, "r"));
  }
  if (kind == "heis") {
    auto kv = detail::parse_kv(rest);
    return heisenberg_mod(detail::need(kv, "q"));
  }
  if (kind == "ce") {
    auto kv = detail::parse_kv(rest);
    return central_extension({detail::need(kv, "p"), detail::need(kv, "r"),
                              detail::need(kv, "m"), detail::need(kv, "a"),
                              detail::need(kv, "b"), detail::need(kv, "g")});
  }
  if (kind == "search") {
    // m takes a comma-separated list tail: "search:p=3,r=1,m=3,9"
    auto mpos = rest.find("m=");
    if (mpos == std::string::npos) throw error("family spec: missing key 'm'");
    auto kv = detail::parse_kv(rest.substr(0, mpos == 0 ? 0 : mpos - 1));
    std::vector<std::uint32_t> ms;
    std::istringstream is(rest.substr(mpos + 2));
    std::string item;
    while (std::getline(is, item, ','))
      ms.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    if (ms.empty()) throw error("family spec: empty m list");
    auto hits = search_extensions(detail::need(kv, "p"), detail::need(kv, "r"), ms);
    if (hits.empty()) throw error("family spec: search found no exemplar");
    return std::move(hits.front().group);
  }
  throw error("family spec: unknown kind '" + kind + "'");
}

}  // namespace ccg
