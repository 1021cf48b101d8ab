#ifndef SWG_SWITCHING_HPP
#define SWG_SWITCHING_HPP

#include <optional>
#include <vector>

#include "swg/graph.hpp"

namespace swg {

/// The side of a spanning complete bipartite graph witnessing membership
/// in D(X). Normalized so that vertex 0 is never in `side`; the empty
/// graph is witnessed by side = 0.
struct BipartitionWitness {
  VertexSet side = 0;
  bool operator==(const BipartitionWitness&) const = default;
};

/// Seidel switch: G ⊕ K_{A, X\A}. Involution; switch(G, A) = switch(G, X\A).
Graph switch_graph(const Graph& g, VertexSet a);

/// Local complementation at a: toggles the n-1 pairs containing a.
Graph local_complement(const Graph& g, int a);

/// Membership test for D(X). Absent when D is not a spanning complete
/// bipartite graph (absence is an answer, not an error).
std::optional<BipartitionWitness> bipartite_witness(const Graph& d);

/// Witness A with g2 = switch(g1, A); absent iff the graphs are not
/// switch-equivalent.
std::optional<BipartitionWitness> switch_equivalent(const Graph& g1, const Graph& g2);

/// All 2^{n-1} members of the switching class of g, enumerated by the
/// subsets A with vertex 0 not in A.
std::vector<Graph> switch_class(const Graph& g);

/// Elements of the switching witness in increasing order; applying the
/// local complementations in that order maps g1 to g2.
std::optional<std::vector<int>> local_complement_path(const Graph& g1, const Graph& g2);

/// The coarser relation: switch-equivalent to g2 or to its complement.
bool extended_equivalent(const Graph& g1, const Graph& g2);

}  // namespace swg

#endif
