#include "swg/switching.hpp"

#include <stdexcept>
#include <string>

namespace swg {

namespace {

void check_nonempty(const Graph& g) {
  if (g.order() < 1)
    throw std::invalid_argument("switching operations require n >= 1");
}

void check_same_order(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order())
    throw std::invalid_argument("graphs have different vertex counts");
}

}  // namespace

Graph switch_graph(const Graph& g, VertexSet a) {
  check_nonempty(g);
  return symmetric_difference(g, complete_bipartite(g.order(), a));
}

Graph local_complement(const Graph& g, int a) {
  check_nonempty(g);
  if (a < 0 || a >= g.order())
    throw std::invalid_argument("local_complement vertex out of range");
  return switch_graph(g, VertexSet{1} << a);
}

std::optional<BipartitionWitness> bipartite_witness(const Graph& d) {
  check_nonempty(d);
  // Candidate side: the neighbors of vertex 0. Normalized by construction
  // (vertex 0 is never its own neighbor).
  VertexSet a = d.neighbors(0);
  if (d == complete_bipartite(d.order(), a)) return BipartitionWitness{a};
  return std::nullopt;
}

std::optional<BipartitionWitness> switch_equivalent(const Graph& g1, const Graph& g2) {
  check_same_order(g1, g2);
  return bipartite_witness(symmetric_difference(g1, g2));
}

std::vector<Graph> switch_class(const Graph& g) {
  check_nonempty(g);
  int n = g.order();
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << (n - 1));
  // A ranges over subsets avoiding vertex 0; one per member of D(X).
  for (VertexSet half = 0; half < (VertexSet{1} << (n - 1)); ++half)
    out.push_back(switch_graph(g, half << 1));
  return out;
}

std::optional<std::vector<int>> local_complement_path(const Graph& g1, const Graph& g2) {
  auto w = switch_equivalent(g1, g2);
  if (!w) return std::nullopt;
  std::vector<int> seq;
  for (int v = 0; v < g1.order(); ++v)
    if ((w->side >> v) & 1u) seq.push_back(v);
  return seq;
}

bool extended_equivalent(const Graph& g1, const Graph& g2) {
  check_same_order(g1, g2);
  return switch_equivalent(g1, g2).has_value() ||
         switch_equivalent(g1, complement(g2)).has_value();
}

}  // namespace swg
