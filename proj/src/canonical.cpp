#include "swg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swg {

namespace {

void check_bound(const Graph& g, int bound) {
  int limit = std::min(bound, kMaxCanonBound);
  if (g.order() > limit)
    throw std::invalid_argument("n=" + std::to_string(g.order()) +
                                " above canonicalization bound " + std::to_string(limit));
}

EdgeBits relabel_bits(const Graph& g, const std::vector<int>& images) {
  EdgeBits out;
  int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.bits().test(pair_index(i, j)))
        out.set(pair_index(images[i], images[j]));
  return out;
}

}  // namespace

Graph relabel(const Graph& g, const Permutation& p) {
  if (static_cast<int>(p.images.size()) != g.order())
    throw std::invalid_argument("permutation size does not match graph order");
  return Graph(g.order(), relabel_bits(g, p.images));
}

ClassKey canonical_form(const Graph& g, int bound) {
  check_bound(g, bound);
  int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  EdgeBits best = g.bits();
  do {
    EdgeBits cur = relabel_bits(g, p);
    if (cur < best) best = cur;
  } while (std::next_permutation(p.begin(), p.end()));
  return ClassKey{n, best};
}

std::optional<Permutation> isomorphic(const Graph& g1, const Graph& g2, int bound) {
  if (g1.order() != g2.order())
    throw std::invalid_argument("isomorphic requires equal vertex counts");
  check_bound(g1, bound);
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (g1.degree_sequence() != g2.degree_sequence()) return std::nullopt;
  int n = g1.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (relabel_bits(g1, p) == g2.bits()) return Permutation{p};
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

ClassKey switch_iso_key(const Graph& g, int bound) {
  check_bound(g, bound);
  if (g.order() < 1)
    throw std::invalid_argument("switch_iso_key requires n >= 1");
  int n = g.order();
  ClassKey best{n, full_edge_mask(pair_count(n))};
  for (VertexSet half = 0; half < (VertexSet{1} << (n - 1)); ++half) {
    Graph member = symmetric_difference(g, complete_bipartite(n, half << 1));
    ClassKey k = canonical_form(member, bound);
    if (k < best) best = k;
  }
  return best;
}

bool switch_iso_equivalent(const Graph& g1, const Graph& g2, int bound) {
  if (g1.order() != g2.order())
    throw std::invalid_argument("switch_iso_equivalent requires equal vertex counts");
  return switch_iso_key(g1, bound) == switch_iso_key(g2, bound);
}

std::vector<Permutation> automorphisms(const Graph& g, int bound) {
  check_bound(g, bound);
  int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    if (relabel_bits(g, p) == g.bits()) out.push_back(Permutation{p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace swg
