#ifndef SWG_INVARIANTS_HPP
#define SWG_INVARIANTS_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swg/canonical.hpp"
#include "swg/graph.hpp"

namespace swg {

/// C(a, b), with the convention that impossible arguments give 0.
long long binomial(int a, int b);

/// A switch-iso class of k-vertex graphs used as a counting pattern.
struct PatternClass {
  int k = 0;
  ClassKey key;
  std::string name;
};

PatternClass make_pattern(const Graph& representative, std::string name);

/// Parses pattern names: K3, N4, L4, C5, ... (family letter + order).
PatternClass named_pattern(std::string_view name);

enum class PatternKind { Complete, Empty };

/// All k-subsets Z with induced(g, Z) in the pattern's switch-iso class,
/// in ascending bit-mask order.
std::vector<VertexSet> sub_family(const Graph& g, const PatternClass& pattern);

long long count_sub(const Graph& g, const PatternClass& pattern);

/// Closed-form counts of K_m / N_m class patterns in the path L_n.
long long formula_path(int n, PatternKind kind, int m);

/// Closed-form counts of K_m / N_m class patterns in the cycle C_n (n >= 4).
long long formula_cycle(int n, PatternKind kind, int m);

/// Disjoint union of paths and cycles padded with isolated vertices to
/// `total`. Cycle parts must exceed 3 for the closed-form counts below.
struct UnionShape {
  std::vector<int> path_lengths;   // each >= 2
  std::vector<int> cycle_lengths;  // each >= 3
  int total = 0;
};

Graph realize_shape(const UnionShape& shape);

long long formula_union_k3(const UnionShape& shape);
long long formula_union_k4(const UnionShape& shape);

/// Intersection of all members of a nonempty family of vertex sets.
VertexSet common_core(std::span<const VertexSet> family);

/// Checks the closed-form counts against brute-force subset counting and
/// prints one line per formula family. Returns true when everything agrees.
bool verify_formulas(int max_n, int num_shapes, unsigned seed, std::ostream& out);

}  // namespace swg

#endif
