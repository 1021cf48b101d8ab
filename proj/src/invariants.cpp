#include "swg/invariants.hpp"

#include <charconv>
#include <ostream>
#include <random>
#include <stdexcept>

namespace swg {

long long binomial(int a, int b) {
  if (b < 0 || a < 0 || a < b) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

PatternClass make_pattern(const Graph& representative, std::string name) {
  return PatternClass{representative.order(), switch_iso_key(representative),
                      std::move(name)};
}

PatternClass named_pattern(std::string_view name) {
  if (name.size() < 2)
    throw std::invalid_argument("pattern name too short: " + std::string(name));
  char family = name[0];
  int m = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), m);
  if (ec != std::errc{} || ptr != name.data() + name.size() || m < 1)
    throw std::invalid_argument("bad pattern order in: " + std::string(name));
  switch (family) {
    case 'K': return make_pattern(complete(m), std::string(name));
    case 'N': return make_pattern(empty_graph(m), std::string(name));
    case 'L': return make_pattern(path(m), std::string(name));
    case 'C': return make_pattern(cycle(m), std::string(name));
    default:
      throw std::invalid_argument("unknown pattern family: " + std::string(name));
  }
}

std::vector<VertexSet> sub_family(const Graph& g, const PatternClass& pattern) {
  if (pattern.k >= g.order())
    throw std::invalid_argument("pattern order must be below the graph order");
  std::vector<VertexSet> out;
  VertexSet limit = VertexSet{1} << g.order();
  for (VertexSet z = 0; z < limit; ++z) {
    if (std::popcount(z) != pattern.k) continue;
    if (switch_iso_key(induced(g, z)) == pattern.key) out.push_back(z);
  }
  return out;
}

long long count_sub(const Graph& g, const PatternClass& pattern) {
  return static_cast<long long>(sub_family(g, pattern).size());
}

long long formula_path(int n, PatternKind kind, int m) {
  if (n < 2) throw std::invalid_argument("formula_path requires n >= 2");
  if (m < 3) throw std::invalid_argument("formula_path requires m >= 3");
  if (kind == PatternKind::Complete) {
    if (m == 3) return static_cast<long long>(n - 2) * (n - 3);
    if (m == 4) return binomial(n - 3, 2);
    return 0;
  }
  // N_3's class also contains the 2-edge path, which the general binomial
  // misses; it gets its own formula.
  if (m == 3) return (n - 2) + binomial(n - 2, 3);
  return binomial(n - m + 1, m);
}

long long formula_cycle(int n, PatternKind kind, int m) {
  if (n < 4) throw std::invalid_argument("formula_cycle requires n >= 4");
  if (m < 3) throw std::invalid_argument("formula_cycle requires m >= 3");
  if (kind == PatternKind::Complete) {
    if (m == 3) return static_cast<long long>(n) * (n - 4);
    if (m == 4) return n >= 5 ? static_cast<long long>(n) * (n - 5) / 2 : 0;
    return 0;
  }
  if (m == 3) return n + static_cast<long long>(n) * (n - 4) * (n - 5) / 6;
  return static_cast<long long>(n) * binomial(n - m - 1, m - 1) / m;
}

namespace {

void check_shape(const UnionShape& shape, bool for_formula) {
  int sum = 0;
  for (int p : shape.path_lengths) {
    if (p < 2) throw std::invalid_argument("path part must have length >= 2");
    sum += p;
  }
  for (int l : shape.cycle_lengths) {
    if (l < 3) throw std::invalid_argument("cycle part must have length >= 3");
    if (for_formula && l <= 3)
      throw std::invalid_argument("closed-form union counts require cycle parts > 3");
    sum += l;
  }
  if (sum > shape.total)
    throw std::invalid_argument("shape parts exceed the ambient vertex count");
}

}  // namespace

Graph realize_shape(const UnionShape& shape) {
  check_shape(shape, false);
  Graph g(0);
  for (int p : shape.path_lengths) g = disjoint_union(g, path(p));
  for (int l : shape.cycle_lengths) g = disjoint_union(g, cycle(l));
  return disjoint_union(g, empty_graph(shape.total - g.order()));
}

long long formula_union_k3(const UnionShape& shape) {
  check_shape(shape, true);
  long long n = shape.total, sum = 0;
  for (long long p : shape.path_lengths)
    sum += (p - 2) * (p - 3) + (p - 1) * (n - p);
  for (long long l : shape.cycle_lengths)
    sum += l * (l - 4) + l * (n - l);
  return sum;
}

long long formula_union_k4(const UnionShape& shape) {
  check_shape(shape, true);
  const auto& ps = shape.path_lengths;
  const auto& cs = shape.cycle_lengths;
  long long sum = 0;
  for (int p : ps) sum += binomial(p - 3, 2);
  // Within a 4-cycle no induced pair of disjoint edges exists; the
  // quadratic term only applies from length 5 on.
  for (long long l : cs) sum += l >= 5 ? l * (l - 5) / 2 : 0;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      sum += static_cast<long long>(ps[i] - 1) * (ps[j] - 1);
  for (std::size_t i = 0; i + 1 < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      sum += static_cast<long long>(cs[i]) * cs[j];
  for (int p : ps)
    for (int l : cs) sum += static_cast<long long>(p - 1) * l;
  return sum;
}

VertexSet common_core(std::span<const VertexSet> family) {
  if (family.empty())
    throw std::invalid_argument("common_core requires a nonempty family");
  VertexSet core = family[0];
  for (VertexSet z : family) core &= z;
  return core;
}

bool verify_formulas(int max_n, int num_shapes, unsigned seed, std::ostream& out) {
  bool ok = true;
  auto report = [&](const char* what, long long checked, long long failed) {
    out << (failed == 0 ? "PASS " : "FAIL ") << what << ": " << checked
        << " comparisons, " << failed << " mismatches\n";
    if (failed != 0) ok = false;
  };

  std::vector<PatternClass> kpat, npat;
  for (int m = 0; m <= 5; ++m) {
    kpat.push_back(m >= 3 ? make_pattern(complete(m), "K" + std::to_string(m))
                          : PatternClass{});
    npat.push_back(m >= 3 ? make_pattern(empty_graph(m), "N" + std::to_string(m))
                          : PatternClass{});
  }

  long long checked = 0, failed = 0;
  for (int n = 2; n <= max_n; ++n)
    for (int m = 3; m <= 5 && m < n; ++m) {
      Graph g = path(n);
      ++checked;
      if (formula_path(n, PatternKind::Complete, m) != count_sub(g, kpat[m])) ++failed;
      ++checked;
      if (formula_path(n, PatternKind::Empty, m) != count_sub(g, npat[m])) ++failed;
    }
  report("formula_path vs brute force", checked, failed);

  checked = failed = 0;
  for (int n = 4; n <= max_n; ++n)
    for (int m = 3; m <= 5 && m < n; ++m) {
      Graph g = cycle(n);
      ++checked;
      if (formula_cycle(n, PatternKind::Complete, m) != count_sub(g, kpat[m])) ++failed;
      ++checked;
      if (formula_cycle(n, PatternKind::Empty, m) != count_sub(g, npat[m])) ++failed;
    }
  report("formula_cycle vs brute force", checked, failed);

  checked = failed = 0;
  int cap = std::min(10, max_n);
  if (cap >= 5) {
    std::mt19937 rng(seed);
    for (int s = 0; s < num_shapes; ++s) {
      UnionShape shape;
      int budget = cap;
      while (budget >= 2 && rng() % 3 != 0) {
        if (budget >= 4 && rng() % 3 == 0) {
          int l = 4 + static_cast<int>(rng() % (budget - 3));
          shape.cycle_lengths.push_back(l);
          budget -= l;
        } else {
          int p = 2 + static_cast<int>(rng() % std::min(4, budget - 1));
          shape.path_lengths.push_back(p);
          budget -= p;
        }
      }
      shape.total = cap - static_cast<int>(rng() % (budget + 1));
      shape.total = std::max(shape.total, 5);
      Graph g = realize_shape(shape);
      ++checked;
      if (formula_union_k3(shape) != count_sub(g, kpat[3])) ++failed;
      ++checked;
      if (formula_union_k4(shape) != count_sub(g, kpat[4])) ++failed;
    }
  }
  report("formula_union_k3/k4 vs brute force", checked, failed);

  return ok;
}

}  // namespace swg
