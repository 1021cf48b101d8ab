#ifndef SWG_CANONICAL_HPP
#define SWG_CANONICAL_HPP

#include <compare>
#include <optional>
#include <vector>

#include "swg/graph.hpp"

namespace swg {

/// A bijection on {0..n-1}; vertex v maps to images[v].
struct Permutation {
  std::vector<int> images;
  bool operator==(const Permutation&) const = default;
};

Graph relabel(const Graph& g, const Permutation& p);

/// Identifies an isomorphism class (or a switch-iso class) as a
/// comparable value: the minimal edge bit set over the relevant orbit.
struct ClassKey {
  int n = 0;
  EdgeBits bits;
  bool operator==(const ClassKey&) const = default;
  auto operator<=>(const ClassKey&) const = default;
};

/// Full permutation search is exact but factorial; the default bound keeps
/// switch-iso keys affordable, callers may raise it up to the hard cap.
constexpr int kDefaultCanonBound = 8;
constexpr int kMaxCanonBound = 10;

/// Minimum edge bit set over all n! relabelings. Equal keys iff isomorphic.
ClassKey canonical_form(const Graph& g, int bound = kDefaultCanonBound);

/// A permutation f with f(g1) = g2, if one exists.
std::optional<Permutation> isomorphic(const Graph& g1, const Graph& g2,
                                      int bound = kDefaultCanonBound);

/// Minimum of canonical_form over all 2^{n-1} switching-class members.
/// Equal keys iff the graphs are switch-equivalent up to isomorphism.
ClassKey switch_iso_key(const Graph& g, int bound = kDefaultCanonBound);

bool switch_iso_equivalent(const Graph& g1, const Graph& g2,
                           int bound = kDefaultCanonBound);

/// All permutations fixing g; contains the identity.
std::vector<Permutation> automorphisms(const Graph& g, int bound = kDefaultCanonBound);

}  // namespace swg

#endif
