#pragma once
// Command-line entry point: build families, run the verification suite, and
// export graphs. Reports are deterministic JSON on stdout; timings go to
// stderr so the report bytes are identical across runs and thread counts.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccg/cccgraph.hpp"
#include "ccg/centralizers.hpp"
#include "ccg/conjugacy.hpp"
#include "ccg/group.hpp"
#include "ccg/joingraphs.hpp"
#include "ccg/presentations.hpp"

namespace ccg {

using json = nlohmann::ordered_json;

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;
inline constexpr int kExitIo = 4;

struct usage_error : error {
  using error::error;
};
struct io_error : error {
  using error::error;
};

struct CliOptions {
  std::size_t max_order = 20000;
  std::uint64_t iso_budget = 10'000'000;
  bool extended = false;
  unsigned threads = 1;  // accepted for interface stability; runs are serial
};

namespace detail {

class StageTimer {
 public:
  explicit StageTimer(std::string name) : name_(std::move(name)) {
    start_ = std::chrono::steady_clock::now();
  }
  ~StageTimer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    std::cerr << "stage " << name_ << ": " << ms << " ms\n";
  }

 private:
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Exemplar construction

// The abelian-quotient exemplar with |Z| = z: the Heisenberg-style group mod
// p^2 has |Z| = p^2, so z must be p^2 here.
inline Group abelian_exemplar(std::uint32_t p, std::uint32_t z) {
  if (z != p * p)
    throw usage_error("abelian exemplar: implemented for |Z| = p^2 only");
  return heisenberg_mod(p * p);
}

// A non-abelian-quotient exemplar with |Z| = z for odd p: the central
// extension with a^{p^2} = z, b^{p^2} = 1, gamma = 0, checked for center
// order and quotient type. No such group exists for p = 2.
inline std::optional<Group> nonabelian_exemplar(std::uint32_t p,
                                                std::uint32_t z,
                                                const CliOptions& opt) {
  if (p == 2) return std::nullopt;
  Group g = central_extension({p, 1, z, 1 % z, 0, 0});
  if (g.center().size() != z)
    throw error("nonabelian exemplar: center order " +
                std::to_string(g.center().size()) + " != " + std::to_string(z));
  Group q = quotient_by_central(g, g.center());
  if (!isomorphic(q, make_L(p, 1), opt.max_order, opt.iso_budget))
    throw error("nonabelian exemplar: central quotient is not of the expected type");
  return g;
}

// ---------------------------------------------------------------------------
// Verification stages. Each returns a deterministic JSON object with a
// boolean "match".

inline json verify_thm1_case(const Group& g, std::uint32_t p,
                             const std::string& which, const CliOptions& opt) {
  detail::StageTimer t("thm1/" + which + " p=" + std::to_string(p));
  json r;
  r["check"] = "thm1";
  r["case"] = which;
  r["p"] = p;
  r["family"] = g.name();
  r["order"] = g.order();
  r["z_order"] = g.center().size();
  std::size_t count = cent_count(g, opt.max_order);
  std::uint64_t predicted = predicted_cent_count(p);
  r["cent"] = {{"count", count}, {"predicted", predicted},
               {"match", count == predicted}};
  r["match"] = (count == predicted);
  return r;
}

inline json verify_thm2_case(const Group& g, const JoinSpec& spec,
                             const std::string& spec_name, std::uint32_t p,
                             const std::string& which, const CliOptions& opt) {
  detail::StageTimer t("thm2/" + which + " p=" + std::to_string(p));
  json r;
  r["check"] = "thm2";
  r["case"] = which;
  r["p"] = p;
  r["family"] = g.name();
  r["z_order"] = g.center().size();
  SimpleGraph gamma = ccc_graph(g, opt.max_order);
  bool vertices_ok = gamma.n_vertices() == spec.realized_vertices();
  bool iso = verify_join_structure(gamma, spec);
  r["graph"] = {{"vertices", gamma.n_vertices()},
                {"predicted_vertices", spec.realized_vertices()},
                {"spec_name", spec_name},
                {"match", vertices_ok && iso}};
  r["match"] = vertices_ok && iso;
  return r;
}

inline json verify_tables_case(const Group& g, const FamilyShape& shape,
                               const FamilyDescriptor& desc,
                               const std::string& which,
                               const CliOptions& opt) {
  detail::StageTimer t("tables/" + which + " p=" + std::to_string(desc.p));
  json r;
  r["check"] = "tables";
  r["case"] = which;
  r["p"] = desc.p;
  r["family"] = g.name();
  r["z_order"] = desc.z_order;
  ClassCensus got = census_of(label_types(g, shape, opt.max_order));
  ClassCensus want = predicted_census(desc);
  json rows = json::array();
  for (const CensusRow& row : got.rows)
    rows.push_back({{"type", row.type_label},
                    {"size", row.class_size},
                    {"count", row.count}});
  json wrows = json::array();
  for (const CensusRow& row : want.rows)
    wrows.push_back({{"type", row.type_label},
                     {"size", row.class_size},
                     {"count", row.count}});
  bool match = census_match(got, want);
  r["census"] = {{"rows", rows}, {"predicted", wrows}, {"match", match}};
  r["match"] = match;
  return r;
}

namespace detail {

// Exponent pair (i, j) of a normal-form element; equality of these pairs is
// equality modulo the central subgroup in the extension families.
inline std::pair<std::uint32_t, std::uint32_t> ij_of(elem x, std::uint32_t p2,
                                                     std::uint32_t m) {
  NormalForm nf = decode_normal_form(x, p2, m);
  return {nf.i, nf.j};
}

}  // namespace detail

// Lemma-level identities: the element-order formula on L(p, 0) and L(p, 1),
// the power identity (x^i y^j)^k = x^{k(k-1)/2 * ijp} x^{ki} y^{kj} in
// L(p, 1), the non-commuting / distinct-centralizer statements, and the
// centralizer-of-power identity, all on the p-exemplars.
inline json verify_lemmas_case(std::uint32_t p, const CliOptions& opt) {
  detail::StageTimer t("lemmas p=" + std::to_string(p));
  json r;
  r["check"] = "lemmas";
  r["p"] = p;
  std::uint32_t p2 = p * p;
  bool all = true;

  // Order formula on both L-groups, all p^4 exponent pairs.
  for (std::uint32_t rr : {0u, 1u}) {
    Group L = make_L(p, rr);
    elem x = L.generators()[0], y = L.generators()[1];
    bool ok = true;
    for (std::uint32_t i = 0; i < p2 && ok; ++i)
      for (std::uint32_t j = 0; j < p2 && ok; ++j) {
        elem w = L.mul(L.power(x, i), L.power(y, j));
        if (L.element_order(w) != order_formula(p, i, j)) ok = false;
      }
    r[rr == 0 ? "order_formula_r0" : "order_formula_r1"] = ok;
    all = all && ok;
  }

  // Power identity in L(p, 1) over all (i, j, k) in [0, p^2)^3.
  {
    Group L = make_L(p, 1);
    elem x = L.generators()[0], y = L.generators()[1];
    bool ok = true;
    for (std::uint32_t i = 0; i < p2 && ok; ++i)
      for (std::uint32_t j = 0; j < p2 && ok; ++j) {
        elem w = L.mul(L.power(x, i), L.power(y, j));
        for (std::uint32_t k = 0; k < p2 && ok; ++k) {
          std::uint64_t half = (std::uint64_t(k) * (k - (k ? 1 : 0))) / 2;
          std::uint64_t xe = (half % p2 * i % p2 * j % p2 * p +
                              std::uint64_t(k) * i) % p2;
          elem rhs = L.mul(L.power(x, xe), L.power(y, std::uint64_t(k) * j % p2));
          if (L.power(w, k) != rhs) ok = false;
        }
      }
    r["power_identity"] = ok;
    all = all && ok;
  }

  // Non-commuting and distinct-centralizer statements need a group with the
  // non-abelian central quotient; no such group exists at p = 2.
  std::optional<Group> gopt = nonabelian_exemplar(p, p, opt);
  if (gopt) {
    const Group& g = *gopt;
    std::uint32_t m = static_cast<std::uint32_t>(g.center().size());
    elem a = g.generators()[0], b = g.generators()[1];
    // a^i b^j != b^j a^i whenever p does not divide both i and j.
    bool ok = true;
    for (std::uint32_t i = 1; i < p2 && ok; ++i)
      for (std::uint32_t j = 1; j < p2 && ok; ++j) {
        if (i % p == 0 && j % p == 0) continue;
        elem ai = g.power(a, i), bj = g.power(b, j);
        if (g.mul(ai, bj) == g.mul(bj, ai)) ok = false;
      }
    r["noncommuting"] = ok;
    all = all && ok;
    // C(a^s b) = C(a^t b) iff s = t.
    bool ok2 = true;
    std::vector<ElementSet> cents;
    for (std::uint32_t s = 1; s < p2; ++s)
      cents.push_back(g.centralizer_of(g.mul(g.power(a, s), b)));
    for (std::uint32_t s = 0; s + 1 < cents.size() && ok2; ++s)
      for (std::uint32_t u = s + 1; u < cents.size() && ok2; ++u)
        if (cents[s] == cents[u]) ok2 = false;
    r["distinct_centralizers"] = ok2;
    all = all && ok2;
    // C(x^k) = C(x) when gcd(k, p) = 1 and x^{p^2} is central.
    bool ok3 = true;
    for (elem x : {a, b, g.mul(a, b)}) {
      if (!g.center().contains(g.power(x, p2))) {
        ok3 = false;
        break;
      }
      for (std::uint32_t k = 1; k < p2 && ok3; ++k) {
        if (k % p == 0) continue;
        if (!(g.centralizer_of(g.power(x, k)) == g.centralizer_of(x)))
          ok3 = false;
      }
    }
    r["centralizer_of_power"] = ok3;
    all = all && ok3;
    // a^p and b^p commute.
    bool ok4 = g.commute(g.power(a, p), g.power(b, p));
    r["ap_bp_commute"] = ok4;
    all = all && ok4;
    // Conjugation congruence: (a^u b^v)^-1 a^i b^j (a^u b^v) has exponents
    // (i + (uj - vi)p, j) mod p^2.
    bool ok5 = true;
    for (std::uint32_t i = 0; i < p2 && ok5; ++i)
      for (std::uint32_t j = 0; j < p2 && ok5; ++j)
        for (std::uint32_t u = 0; u < p2 && ok5; ++u)
          for (std::uint32_t v = 0; v < p2 && ok5; ++v) {
            elem w = g.mul(g.power(a, i), g.power(b, j));
            elem c = g.mul(g.power(a, u), g.power(b, v));
            auto [ci, cj] = detail::ij_of(g.conjugate(w, c), p2, m);
            std::uint64_t shift =
                (std::uint64_t(u) * j + std::uint64_t(p2 - 1) * v % p2 * i) % p2;
            std::uint32_t want_i =
                static_cast<std::uint32_t>((i + shift * p) % p2);
            if (ci != want_i || cj != j) ok5 = false;
          }
    r["conjugation_formula"] = ok5;
    all = all && ok5;
  }
  r["match"] = all;
  return r;
}

inline json verify_conjecture_case(std::uint32_t p, std::uint32_t n,
                                   const CliOptions& opt) {
  detail::StageTimer t("conjecture p=" + std::to_string(p) +
                       " n=" + std::to_string(n));
  json r;
  r["check"] = "conjecture";
  r["p"] = p;
  r["n"] = n;
  std::uint64_t predicted = predicted_cent_count_conjecture(p, n);
  r["predicted"] = predicted;
  bool all = true;
  json cases = json::array();
  {
    Group g = heisenberg_mod(static_cast<std::uint32_t>(
        std::uint64_t(n == 1 ? p : p * p)));
    std::size_t count = cent_count(g, opt.max_order);
    cases.push_back({{"family", g.name()}, {"count", count},
                     {"match", count == predicted}});
    all = all && (count == predicted);
  }
  if (n == 2) {
    if (std::optional<Group> g = nonabelian_exemplar(p, p, opt)) {
      std::size_t count = cent_count(*g, opt.max_order);
      cases.push_back({{"family", g->name()}, {"count", count},
                       {"match", count == predicted}});
      all = all && (count == predicted);
    }
  }
  r["cases"] = cases;
  r["match"] = all;
  return r;
}

// Negative result at p = 2: no consistent extension in the family has the
// non-abelian central quotient.
inline json verify_capability_p2(const CliOptions&) {
  detail::StageTimer t("capability p=2");
  json r;
  r["check"] = "capability";
  r["p"] = 2;
  std::vector<SearchHit> hits = search_extensions(2, 1, {2, 4});
  r["search_hits"] = hits.size();
  r["match"] = hits.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Commands

inline int emit_reports(const std::vector<json>& reports) {
  json out;
  out["reports"] = reports;
  std::cout << out.dump(2) << "\n";
  for (const json& r : reports)
    if (!r.at("match").get<bool>()) return kExitMismatch;
  return kExitOk;
}

inline int cmd_verify(const std::string& what, std::uint32_t p,
                      std::optional<std::uint32_t> z,
                      std::optional<std::uint32_t> n, const CliOptions& opt) {
  std::vector<json> reports;
  auto run_for = [&](std::uint32_t pp) {
    std::uint32_t za = pp * pp;            // abelian exemplar's |Z|
    std::uint32_t zn = z.value_or(pp);     // non-abelian exemplar's |Z|
    if (what == "thm1" || what == "all") {
      reports.push_back(verify_thm1_case(abelian_exemplar(pp, za), pp,
                                         "abelian", opt));
      if (auto g = nonabelian_exemplar(pp, zn, opt))
        reports.push_back(verify_thm1_case(*g, pp, "nonabelian", opt));
    }
    if (what == "thm2" || what == "all") {
      reports.push_back(verify_thm2_case(abelian_exemplar(pp, za),
                                         build_M1(pp, za), "M1", pp, "abelian",
                                         opt));
      if (auto g = nonabelian_exemplar(pp, zn, opt))
        reports.push_back(verify_thm2_case(*g, build_M2(pp, zn), "M2", pp,
                                           "nonabelian", opt));
    }
    if (what == "tables" || what == "all") {
      reports.push_back(verify_tables_case(
          abelian_exemplar(pp, za), family_shape_heisenberg(pp * pp, pp),
          make_descriptor(pp, za, QuotientKind::abelian), "abelian", opt));
      if (auto g = nonabelian_exemplar(pp, zn, opt))
        reports.push_back(verify_tables_case(
            *g, family_shape_extension({pp, 1, zn, 1 % zn, 0, 0}),
            make_descriptor(pp, zn, QuotientKind::nonabelian), "nonabelian",
            opt));
    }
    if (what == "lemmas" || what == "all")
      reports.push_back(verify_lemmas_case(pp, opt));
    if (what == "conjecture" || what == "all") {
      if (n) {
        reports.push_back(verify_conjecture_case(pp, *n, opt));
      } else {
        reports.push_back(verify_conjecture_case(pp, 1, opt));
        reports.push_back(verify_conjecture_case(pp, 2, opt));
      }
    }
    if (what == "all" && pp == 2)
      reports.push_back(verify_capability_p2(opt));
  };
  if (what == "all" && p == 0) {
    run_for(2);
    run_for(3);
    if (opt.extended) run_for(5);
  } else {
    run_for(p == 0 ? 3 : p);
  }
  return emit_reports(reports);
}

// Tries to name the central quotient among the small standard candidates.
inline std::string identify_quotient(const Group& q, const CliOptions& opt) {
  std::vector<Group> candidates;
  std::size_t n = q.order();
  candidates.push_back(cyclic(static_cast<std::uint32_t>(n)));
  std::uint32_t s = static_cast<std::uint32_t>(std::lround(std::sqrt(double(n))));
  if (std::size_t(s) * s == n && s > 1)
    candidates.push_back(direct_product(cyclic(s), cyclic(s)));
  for (std::uint32_t pp : {2u, 3u, 5u})
    if (n == std::size_t(pp) * pp * pp * pp) {
      candidates.push_back(make_L(pp, 0));
      candidates.push_back(make_L(pp, 1));
    }
  for (const Group& c : candidates)
    if (isomorphic(q, c, opt.max_order, opt.iso_budget)) return c.name();
  return "unidentified (order " + std::to_string(n) + ")";
}

inline int cmd_build(const std::string& spec, const CliOptions& opt) {
  Group g = build_family(spec);
  json r;
  r["family"] = g.name();
  r["order"] = g.order();
  r["z_order"] = g.center().size();
  if (g.order() / g.center().size() <= 10000) {
    Group q = quotient_by_central(g, g.center());
    r["quotient"] = identify_quotient(q, opt);
  }
  std::cout << r.dump(2) << "\n";
  return kExitOk;
}

inline int cmd_export(const std::string& what, const std::string& family,
                      std::uint32_t p, std::uint32_t z,
                      const std::string& format, const std::string& out_path,
                      const CliOptions& opt) {
  std::string payload;
  if (what == "ccc") {
    if (family.empty())
      throw usage_error("export ccc requires --family");
    Group g = build_family(family);
    SimpleGraph gamma = ccc_graph(g, opt.max_order);
    payload = format == "dot" ? to_dot(gamma, "ccc")
                              : join_spec_json(decompose_join(gamma));
  } else if (what == "m1" || what == "m2") {
    if (p == 0 || z == 0)
      throw usage_error("export " + what + " requires --p and --z");
    if (what == "m2" && (p < 3 || p % 2 == 0))
      throw usage_error("export m2: p must be an odd prime");
    JoinSpec spec = what == "m1" ? build_M1(p, z) : build_M2(p, z);
    payload = format == "dot" ? realized_dot(spec, what)
                              : join_spec_json(spec);
  } else {
    throw usage_error("export: unknown target '" + what + "'");
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw io_error("cannot open output file: " + out_path);
    f << payload;
    if (!f.good()) throw io_error("write failed: " + out_path);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Argument parsing

inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"finite-group centralizer / conjugacy-class graph verifier"};
  app.require_subcommand(1);
  CliOptions opt;
  app.add_option("--max-order", opt.max_order, "largest group order handled");
  app.add_option("--iso-budget", opt.iso_budget,
                 "isomorphism search node budget");
  app.add_flag("--extended", opt.extended, "include p=5 in 'verify all'");
  app.add_option("--threads", opt.threads, "worker threads (reports are "
                 "deterministic regardless)");

  std::string family, what, format = "dot", out_path;
  std::uint32_t p = 0, z = 0, r = 0;
  std::optional<std::uint32_t> n_opt;

  // Let global flags (e.g. --extended, --max-order) appear after the
  // subcommand as well.
  app.fallthrough();
  CLI::App* build = app.add_subcommand("build", "construct a family group");
  build->fallthrough();
  build->add_option("spec", family, "family spec, e.g. heis:q=9 or "
                    "ce:p=3,r=1,m=3,a=1,b=0,g=0")->required();

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  verify->fallthrough();
  verify->add_option("what", what,
                     "thm1|thm2|tables|lemmas|conjecture|all")->required();
  verify->add_option("--p", p, "prime p");
  std::uint32_t zv = 0, nv = 0;
  verify->add_option("--z", zv, "center order |Z|");
  verify->add_option("--n", nv, "conjecture exponent n");
  verify->add_option("--r", r, "quotient kind r (accepted, informative)");

  CLI::App* exp = app.add_subcommand("export", "write a graph to DOT/JSON");
  exp->fallthrough();
  exp->add_option("what", what, "ccc|m1|m2")->required();
  exp->add_option("--family", family, "family spec for ccc");
  exp->add_option("--p", p, "prime p for m1/m2");
  exp->add_option("--z", z, "center order for m1/m2");
  exp->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(family, opt);
    if (verify->parsed()) {
      static const std::vector<std::string> kinds{
          "thm1", "thm2", "tables", "lemmas", "conjecture", "all"};
      if (std::find(kinds.begin(), kinds.end(), what) == kinds.end())
        throw usage_error("verify: unknown check '" + what + "'");
      std::optional<std::uint32_t> zopt, nopt;
      if (verify->count("--z")) zopt = zv;
      if (verify->count("--n")) nopt = nv;
      return cmd_verify(what, p, zopt, nopt, opt);
    }
    if (exp->parsed()) return cmd_export(what, family, p, z, format, out_path, opt);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const error& e) {
    // Family spec syntax problems are usage errors; anything else from the
    // engine means the requested group parameters are inconsistent.
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.rfind("family spec", 0) == 0 ? kExitUsage : kExitInconsistent;
  }
  return kExitUsage;
}

}  // namespace ccg
