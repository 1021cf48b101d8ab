#ifndef SWG_CLASSIFY_HPP
#define SWG_CLASSIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "swg/canonical.hpp"
#include "swg/graph.hpp"

namespace swg {

/// Induced-subgraph counts per switch-iso pattern class. The k4/n4/l4
/// columns are only defined for n >= 5 (patterns must be smaller than the
/// graph) and are stored as 0 below that.
struct InvariantProfile {
  long long k3 = 0, n3 = 0, k4 = 0, n4 = 0, l4 = 0;
  bool operator==(const InvariantProfile&) const = default;
};

struct TypeRecord {
  ClassKey key;
  Graph representative;  // the graph whose bits equal the key
  std::string name;
  std::vector<std::string> aliases;
  InvariantProfile profile;
};

struct Catalog {
  int n = 0;
  std::vector<TypeRecord> types;       // sorted by key
  std::map<ClassKey, int> index;       // key -> position in types
  const TypeRecord* find(const ClassKey& key) const;
};

enum class Method { Inductive, Transversal };

/// The single type on one vertex.
Catalog base_catalog();

/// Extends the catalog for n-1 by one vertex: candidates G0 ⊕ K_{w,Z} over
/// automorphism-orbit representatives Z with 2|Z| <= n, deduplicated by
/// switch-iso key. The size bound is a prune only; correctness rests on
/// deduplication and is cross-checked against the transversal method.
Catalog enumerate_types_inductive(int n, const Catalog& previous);

/// Buckets the graphs with vertex 0 isolated (one per switching class) by
/// switch-iso key. Costs 2^{C(n-1,2)} graphs; refuse n > 7 unless forced.
Catalog enumerate_types_transversal(int n, bool allow_large = false);

Catalog build_catalog(int n, Method method = Method::Inductive,
                      bool allow_large = false);

/// Number of switch-iso types on n vertices.
long long mu(int n, Method method = Method::Inductive, bool allow_large = false);

/// 2^{C(n,2) - n + 1}, the number of switching classes on n vertices.
unsigned long long switch_class_count(int n);

/// Counts switching classes by scanning all 2^{C(n,2)} graphs (n <= 6).
long long count_switch_classes_exhaustive(int n);

const TypeRecord& type_of(const Graph& g, const Catalog& catalog);

InvariantProfile profile_of(const Graph& g);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The conventional representatives for n <= 6, in a fixed label order.
std::vector<NamedGraph> named_types(int n);

/// Additional names listed as equivalent to a labeled type.
std::vector<NamedGraph> named_aliases(int n);

}  // namespace swg

#endif
