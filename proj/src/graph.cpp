#include "swg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swg {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxVertices) + "]");
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n));
}

void check_vertex_set(VertexSet s, int n) {
  if (s >> n)
    throw std::invalid_argument("vertex set contains vertices >= n=" + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, EdgeBits bits) : n_(n), edges_(bits) {
  check_order(n);
  EdgeBits mask = full_edge_mask(pair_count(n));
  if ((bits & mask) != bits)
    throw std::invalid_argument("edge bits outside the first C(n,2) positions");
}

void Graph::set_edge(int u, int v, bool present) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") rejected");
  if (present) edges_.set(pair_index(u, v));
  else         edges_.reset(pair_index(u, v));
}

void Graph::toggle_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw std::invalid_argument("loop edge rejected");
  edges_.flip(pair_index(u, v));
}

int Graph::degree(int v) const {
  check_vertex(v, n_);
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_edge(u, v)) ++d;
  return d;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v, n_);
  VertexSet s = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_edge(u, v)) s |= VertexSet{1} << u;
  return s;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(n_, 0);
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (has_edge(i, j)) { ++deg[i]; ++deg[j]; }
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set_edge(u, v);  // duplicates collapse
  return g;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complete(int n) {
  check_order(n);
  return Graph(n, full_edge_mask(pair_count(n)));
}

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g = path(n);
  g.set_edge(0, n - 1);
  return g;
}

Graph complete_bipartite(int n, VertexSet a) {
  check_order(n);
  check_vertex_set(a, n);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (((a >> i) & 1u) != ((a >> j) & 1u)) g.set_edge(i, j);
  return g;
}

Graph symmetric_difference(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order())
    throw std::invalid_argument("symmetric_difference requires equal vertex counts");
  return Graph(g1.order(), g1.bits() ^ g2.bits());
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n = g1.order() + g2.order();
  if (n > kMaxVertices)
    throw std::invalid_argument("disjoint_union result exceeds " +
                                std::to_string(kMaxVertices) + " vertices");
  Graph g(n, g1.bits());
  int off = g1.order();
  for (auto [u, v] : g2.edge_list()) g.set_edge(u + off, v + off);
  return g;
}

Graph complement(const Graph& g) {
  return Graph(g.order(), g.bits() ^ full_edge_mask(pair_count(g.order())));
}

Graph induced(const Graph& g, VertexSet z) {
  check_vertex_set(z, g.order());
  std::vector<int> verts;
  for (int v = 0; v < g.order(); ++v)
    if ((z >> v) & 1u) verts.push_back(v);
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t j = 1; j < verts.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.has_edge(verts[i], verts[j]))
        h.set_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

}  // namespace swg
