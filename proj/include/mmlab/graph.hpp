#ifndef MMLAB_GRAPH_HPP
#define MMLAB_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mmlab/algebra.hpp"
#include "mmlab/element_set.hpp"
#include "mmlab/error.hpp"
#include "mmlab/limits.hpp"

namespace mmlab {

/// Rank over GF(2) of row vectors packed into words.
inline int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t v = rows[i];
    if (v == 0) continue;
    ++rank;
    const std::uint64_t low = v & (~v + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & low) rows[j] ^= v;
  }
  return rank;
}

/// Graph on vertices 0..n-1 with optional loops and no multiple edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n), 0) {
    require(n >= 0 && n <= 64, ErrorCode::TooLarge, "graphs are limited to 64 vertices");
  }

  int order() const { return static_cast<int>(adj_.size()); }
  ElementSet vertices() const { return ElementSet::prefix(order()); }

  void add_edge(int u, int v) {
    require(u >= 0 && v >= 0 && u < order() && v < order(), ErrorCode::InvalidArgument, "edge endpoint out of range");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  bool has_loop(int v) const { return adjacent(v, v); }
  bool loopless() const {
    for (int v = 0; v < order(); ++v)
      if (has_loop(v)) return false;
    return true;
  }
  /// Neighbours of v other than v itself.
  ElementSet neighbours(int v) const {
    return ElementSet(adj_[static_cast<std::size_t>(v)]).without(v);
  }
  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Edges {u,v} with u <= v, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (int v = u; v < order(); ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  /// G + X: loops toggled on X.
  Graph toggled_loops(ElementSet x) const {
    Graph g = *this;
    x.for_each([&](int v) { g.adj_[static_cast<std::size_t>(v)] ^= std::uint64_t{1} << v; });
    return g;
  }

  /// n(A(G)[X, X]) over GF(2), without building a relabelled graph.
  int nullity_on(ElementSet x) const {
    std::vector<std::uint64_t> rows;
    x.for_each([&](int v) { rows.push_back(adj_[static_cast<std::size_t>(v)] & x.bits()); });
    return x.size() - gf2_rank(std::move(rows));
  }
  /// n(A((G + loops)[X])) with loops toggled on `loops`.
  int nullity_on(ElementSet x, ElementSet loops) const {
    std::vector<std::uint64_t> rows;
    x.for_each([&](int v) {
      std::uint64_t r = adj_[static_cast<std::size_t>(v)];
      if (loops.contains(v)) r ^= std::uint64_t{1} << v;
      rows.push_back(r & x.bits());
    });
    return x.size() - gf2_rank(std::move(rows));
  }

  FieldMatrix adjacency() const {
    FieldMatrix a(Field::GF2, order(), order());
    for (int u = 0; u < order(); ++u)
      for (int v = 0; v < order(); ++v)
        if (adjacent(u, v)) a.set_code(u, v, 1);
    return a;
  }

  /// G[X] relabelled to 0..|X|-1 in increasing order.
  Graph induced(ElementSet x) const {
    const auto vs = x.indices();
    Graph g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i; j < vs.size(); ++j)
        if (adjacent(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  static Graph parse(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) {
      while (std::getline(in, out)) {
        const auto first = out.find_first_not_of(" \t\r");
        if (first != std::string::npos) return true;
      }
      return false;
    };
    require(next_line(line), ErrorCode::ParseError, ".graph: missing vertex count");
    int n = -1;
    {
      std::istringstream ls(line);
      std::string extra;
      require(static_cast<bool>(ls >> n) && !(ls >> extra) && n >= 0, ErrorCode::ParseError,
              ".graph: first line must be a vertex count");
    }
    require(n <= 64, ErrorCode::TooLarge, ".graph: more than 64 vertices");
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    while (next_line(line)) {
      std::istringstream ls(line);
      int u = -1, v = -1;
      std::string extra;
      require(static_cast<bool>(ls >> u >> v) && !(ls >> extra), ErrorCode::ParseError,
              ".graph: expected '<u> <v>' but got '" + line + "'");
      require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::ParseError, ".graph: vertex out of range in '" + line + "'");
      g.add_edge(u, v);
    }
    return g;
  }
  static Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
  }

  std::string to_text() const {
    std::ostringstream out;
    out << order() << "\n";
    for (auto [u, v] : edges()) out << u << " " << v << "\n";
    return out.str();
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> adj_;
};

inline void require_loopless(const Graph& g) {
  require(g.loopless(), ErrorCode::HasLoops, "operation needs a graph without loops");
}

/// All X with G[X] Eulerian (every vertex of X has an even number of neighbours in X).
inline std::vector<ElementSet> eulerian_subsets(const Graph& g) {
  require_loopless(g);
  check_bound(g.order(), limits().max_eulerian_vertices, "vertices for Eulerian enumeration");
  std::vector<ElementSet> out;
  for_each_subset(g.vertices(), [&](ElementSet x) {
    bool even = true;
    x.for_each([&](int v) {
      if (even && (g.neighbours(v) & x).size() % 2 != 0) even = false;
    });
    if (even) out.push_back(x);
  });
  sort_canonical(out);
  return out;
}

struct ParitySplit {
  ElementSet odd;
  ElementSet even;
};

/// Vertices outside X split by the parity of their number of neighbours in X.
inline ParitySplit neighborhood_parity(const Graph& g, ElementSet x) {
  require(x.subset_of(g.vertices()), ErrorCode::UnknownElement, "vertex set outside the graph");
  ParitySplit p;
  (g.vertices() - x).for_each([&](int v) {
    if ((g.neighbours(v) & x).size() % 2 != 0) p.odd.insert(v);
    else p.even.insert(v);
  });
  return p;
}

}  // namespace mmlab

#endif  // MMLAB_GRAPH_HPP
