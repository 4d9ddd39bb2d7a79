#pragma once
// The commuting conjugacy class graph Γ(G) on non-central classes.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ccg/conjugacy.hpp"
#include "ccg/group.hpp"

namespace ccg {

// Simple undirected graph, irreflexive, adjacency matrix storage.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n, std::vector<std::string> labels = {})
      : n_(n), adj_(n * n, 0), labels_(std::move(labels)) {
    if (labels_.empty())
      for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
    if (labels_.size() != n_) throw error("SimpleGraph: label count mismatch");
  }

  std::size_t n_vertices() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return u != v && adj_[u * n_ + v];
  }
  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw error("SimpleGraph: vertex out of range");
    if (u == v) throw error("SimpleGraph: loops not allowed");
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  }
  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += adjacent(v, u);
    return d;
  }
  std::size_t n_edges() const {
    std::size_t e = 0;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) e += adjacent(u, v);
    return e;
  }
  const std::string& label(std::size_t v) const { return labels_[v]; }

  bool connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n_; ++v)
        if (adjacent(u, v) && !seen[v]) {
          seen[v] = 1;
          ++cnt;
          stack.push_back(v);
        }
    }
    return cnt == n_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<char> adj_;
  std::vector<std::string> labels_;
};

// True iff some x in A and y in B commute. Rep-scan: the representative of A
// is tested against all of B. Sound because adjacency is conjugation
// invariant — if x' in A commutes with y' in B, conjugating the pair carries
// x' onto the representative while keeping its partner inside B.
inline bool classes_commute(const Group& g, const ConjugacyClass& A,
                            const ConjugacyClass& B) {
  const ElementSet& z = g.center();
  if (z.contains(A.representative) || z.contains(B.representative))
    throw error("classes_commute: central class supplied");
  if (A.members == B.members)
    throw error("classes_commute: classes must be distinct");
  elem x = A.representative;
  for (elem y : B.members.members)
    if (g.commute(x, y)) return true;
  return false;
}

// Exhaustive |A|*|B| oracle; test use.
inline bool classes_commute_full(const Group& g, const ConjugacyClass& A,
                                 const ConjugacyClass& B) {
  for (elem x : A.members.members)
    for (elem y : B.members.members)
      if (g.commute(x, y)) return true;
  return false;
}

// Γ(G) on the given non-central classes, vertex order = list order.
inline SimpleGraph ccc_graph_of(const Group& g,
                                const std::vector<ConjugacyClass>& classes) {
  std::vector<std::string> labels;
  for (const ConjugacyClass& c : classes) {
    std::ostringstream os;
    if (c.type_label) os << "T" << *c.type_label << ":";
    os << g.label(c.representative);
    labels.push_back(os.str());
  }
  SimpleGraph gr(classes.size(), std::move(labels));
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b)
      if (classes_commute(g, classes[a], classes[b])) gr.add_edge(a, b);
  return gr;
}

// Γ(G): vertices are the non-central classes in census order (size, then
// representative index).
inline SimpleGraph ccc_graph(const Group& g, std::size_t order_bound = 20000) {
  std::vector<ConjugacyClass> classes = conjugacy_classes(g, order_bound);
  const ElementSet& z = g.center();
  std::vector<ConjugacyClass> noncentral;
  for (ConjugacyClass& c : classes)
    if (!z.contains(c.representative)) noncentral.push_back(std::move(c));
  return ccc_graph_of(g, noncentral);
}

// Deterministic DOT rendering: one vertex per line, one edge per unordered
// pair in (u, v) order.
inline std::string to_dot(const SimpleGraph& g,
                          const std::string& name = "ccc") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.n_vertices(); ++v)
    os << "  v" << v << " [label=\"" << g.label(v) << "\"];\n";
  for (std::size_t u = 0; u < g.n_vertices(); ++u)
    for (std::size_t v = u + 1; v < g.n_vertices(); ++v)
      if (g.adjacent(u, v)) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ccg
