#include "swg/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "swg/invariants.hpp"
#include "swg/switching.hpp"
#include "parallel.hpp"

namespace swg {

namespace {

Graph pad(const Graph& g, int n) {
  return disjoint_union(g, empty_graph(n - g.order()));
}

VertexSet apply_to_set(const Permutation& f, VertexSet s) {
  VertexSet out = 0;
  for (std::size_t v = 0; v < f.images.size(); ++v)
    if ((s >> v) & 1u) out |= VertexSet{1} << f.images[v];
  return out;
}

Catalog finalize_catalog(int n, const std::vector<ClassKey>& keys) {
  std::map<ClassKey, TypeRecord> records;
  for (const ClassKey& k : keys)
    records.try_emplace(k, TypeRecord{k, Graph(n, k.bits), "", {}, {}});

  std::map<ClassKey, std::string> names;
  for (const NamedGraph& ng : named_types(n))
    names.emplace(switch_iso_key(ng.graph, n), ng.name);
  std::map<ClassKey, std::vector<std::string>> aliases;
  for (const NamedGraph& ng : named_aliases(n))
    aliases[switch_iso_key(ng.graph, n)].push_back(ng.name);

  Catalog cat;
  cat.n = n;
  int idx = 0;
  for (auto& [key, rec] : records) {
    if (auto it = names.find(key); it != names.end()) rec.name = it->second;
    else rec.name = "type-" + std::to_string(n) + "-" + std::to_string(idx + 1);
    if (auto it = aliases.find(key); it != aliases.end()) rec.aliases = it->second;
    rec.profile = profile_of(rec.representative);
    cat.index.emplace(key, idx++);
    cat.types.push_back(std::move(rec));
  }
  return cat;
}

}  // namespace

const TypeRecord* Catalog::find(const ClassKey& key) const {
  auto it = index.find(key);
  return it == index.end() ? nullptr : &types[it->second];
}

Catalog base_catalog() {
  return finalize_catalog(1, {switch_iso_key(empty_graph(1))});
}

Catalog enumerate_types_inductive(int n, const Catalog& previous) {
  if (previous.n != n - 1)
    throw std::invalid_argument("previous catalog must be for n-1");
  if (n < 2 || n > kMaxCanonBound)
    throw std::invalid_argument("inductive enumeration supports 2 <= n <= " +
                                std::to_string(kMaxCanonBound));
  int w = n - 1;  // the added vertex
  std::vector<Graph> candidates;
  for (const TypeRecord& type : previous.types) {
    auto auts = automorphisms(type.representative, n - 1);
    Graph padded = pad(type.representative, n);
    for (VertexSet z = 0; z < (VertexSet{1} << (n - 1)); ++z) {
      if (2 * std::popcount(z) > n) continue;
      bool minimal = true;
      for (const Permutation& f : auts)
        if (apply_to_set(f, z) < z) { minimal = false; break; }
      if (!minimal) continue;
      Graph g = padded;
      for (int v = 0; v < n - 1; ++v)
        if ((z >> v) & 1u) g.toggle_edge(v, w);
      candidates.push_back(g);
    }
  }
  std::vector<ClassKey> keys(candidates.size());
  detail::parallel_for(candidates.size(),
                       [&](std::size_t i) { keys[i] = switch_iso_key(candidates[i], n); });
  return finalize_catalog(n, keys);
}

Catalog enumerate_types_transversal(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("transversal enumeration requires n >= 1");
  if (n > 7 && !allow_large)
    throw std::invalid_argument("transversal enumeration refuses n > 7 "
                                "(pass allow_large to override)");
  int m = pair_count(n - 1);
  std::uint64_t total = std::uint64_t{1} << m;

  // Bucket the (n-1)-vertex parts by isomorphism first; the switch-iso key
  // only depends on the bucket.
  int workers = detail::worker_count();
  std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::map<ClassKey, std::uint64_t>> partial(workers);
  detail::parallel_for(static_cast<std::size_t>(workers), [&](std::size_t t) {
    std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      Graph h(n - 1, EdgeBits{bits, 0});
      ClassKey ck = canonical_form(h, n - 1);
      auto [it, inserted] = partial[t].try_emplace(ck, bits);
      if (!inserted && bits < it->second) it->second = bits;
    }
  });
  std::map<ClassKey, std::uint64_t> reps;
  for (const auto& p : partial)
    for (const auto& [ck, bits] : p) {
      auto [it, inserted] = reps.try_emplace(ck, bits);
      if (!inserted && bits < it->second) it->second = bits;
    }

  std::vector<Graph> padded;
  padded.reserve(reps.size());
  for (const auto& [ck, bits] : reps)
    padded.push_back(disjoint_union(empty_graph(1), Graph(n - 1, EdgeBits{bits, 0})));
  std::vector<ClassKey> keys(padded.size());
  detail::parallel_for(padded.size(),
                       [&](std::size_t i) { keys[i] = switch_iso_key(padded[i], n); });
  return finalize_catalog(n, keys);
}

Catalog build_catalog(int n, Method method, bool allow_large) {
  if (n < 1) throw std::invalid_argument("catalog requires n >= 1");
  if (method == Method::Transversal) return enumerate_types_transversal(n, allow_large);
  Catalog cat = base_catalog();
  for (int k = 2; k <= n; ++k) cat = enumerate_types_inductive(k, cat);
  return cat;
}

long long mu(int n, Method method, bool allow_large) {
  return static_cast<long long>(build_catalog(n, method, allow_large).types.size());
}

unsigned long long switch_class_count(int n) {
  if (n < 1) throw std::invalid_argument("switch_class_count requires n >= 1");
  int e = pair_count(n) - n + 1;
  if (e >= 64)
    throw std::overflow_error("switching-class count exceeds 64 bits for n=" +
                              std::to_string(n));
  return 1ull << e;
}

long long count_switch_classes_exhaustive(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("exhaustive class count supports 1 <= n <= 6");
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Graph g(n, EdgeBits{bits, 0});
    std::uint64_t least = bits;
    for (const Graph& member : switch_class(g))
      least = std::min(least, member.bits().lo);
    seen.insert(least);
  }
  return static_cast<long long>(seen.size());
}

const TypeRecord& type_of(const Graph& g, const Catalog& catalog) {
  if (g.order() != catalog.n)
    throw std::invalid_argument("graph order does not match the catalog");
  ClassKey key = switch_iso_key(g, catalog.n);
  const TypeRecord* rec = catalog.find(key);
  if (!rec)
    throw std::logic_error("switch-iso key missing from catalog: "
                           "catalog incomplete or corrupted");
  return *rec;
}

InvariantProfile profile_of(const Graph& g) {
  static const PatternClass k3 = make_pattern(complete(3), "K3");
  static const PatternClass n3 = make_pattern(empty_graph(3), "N3");
  static const PatternClass k4 = make_pattern(complete(4), "K4");
  static const PatternClass n4 = make_pattern(empty_graph(4), "N4");
  static const PatternClass l4 = make_pattern(path(4), "L4");
  InvariantProfile p;
  if (g.order() > 3) {
    p.k3 = count_sub(g, k3);
    p.n3 = count_sub(g, n3);
  }
  if (g.order() > 4) {
    p.k4 = count_sub(g, k4);
    p.n4 = count_sub(g, n4);
    p.l4 = count_sub(g, l4);
  }
  return p;
}

std::vector<NamedGraph> named_types(int n) {
  switch (n) {
    case 1:
      return {{"N_1", empty_graph(1)}};
    case 2:
      // A single type: K_2 and N_2 are switch-equivalent.
      return {{"N_2", empty_graph(2)}};
    case 3:
      return {{"K_3", complete(3)}, {"N_3", empty_graph(3)}};
    case 4:
      return {{"K_4", complete(4)}, {"N_4", empty_graph(4)}, {"L_4", path(4)}};
    case 5:
      return {{"K_5", complete(5)},
              {"N_5", empty_graph(5)},
              {"C_5", cycle(5)},
              {"L_2^5", pad(path(2), 5)},
              {"co(L_2^5)", complement(pad(path(2), 5))},
              {"L_3^5", pad(path(3), 5)},
              {"co(L_3^5)", complement(pad(path(3), 5))}};
    case 6:
      return {{"K_6", complete(6)},
              {"N_6", empty_graph(6)},
              {"L_2^6", pad(path(2), 6)},
              {"co(L_2^6)", complement(pad(path(2), 6))},
              {"C_5^6", pad(cycle(5), 6)},
              {"(L_2+L_2)^6", pad(disjoint_union(path(2), path(2)), 6)},
              {"L_3^6", pad(path(3), 6)},
              {"K_3^6", pad(complete(3), 6)},
              {"(L_3+L_2)^6", pad(disjoint_union(path(3), path(2)), 6)},
              {"L_4^6", pad(path(4), 6)},
              {"co(L_3^6)", complement(pad(path(3), 6))},
              {"L_3+L_3", disjoint_union(path(3), path(3))},
              {"C_4^6", pad(cycle(4), 6)},
              {"L_5^6", pad(path(5), 6)},
              {"L_6", path(6)},
              {"C_6", cycle(6)}};
    default:
      return {};
  }
}

std::vector<NamedGraph> named_aliases(int n) {
  switch (n) {
    case 2:
      return {{"K_2", complete(2)}};
    case 4:
      return {{"L_2+N_2", pad(path(2), 4)}, {"L_3+N_1", pad(path(3), 4)}};
    case 5:
      return {{"K_4^5", pad(complete(4), 5)},
              {"K_3^5", pad(complete(3), 5)},
              {"L_5", path(5)}};
    case 6:
      return {{"K_4^6", pad(complete(4), 6)},
              {"C_3+L_3", disjoint_union(cycle(3), path(3))},
              {"(C_3+L_2)^6", pad(disjoint_union(cycle(3), path(2)), 6)},
              {"co(C_6)", complement(cycle(6))},
              // The matching itself, not its complement: switching C_6 at
              // alternate vertices gives L_2+L_2+L_2 directly, while the
              // complement lands in the C_4^6 type.
              {"L_2+L_2+L_2",
               disjoint_union(disjoint_union(path(2), path(2)), path(2))}};
    default:
      return {};
  }
}

}  // namespace swg
