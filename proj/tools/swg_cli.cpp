#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swg/classify.hpp"
#include "swg/graph6.hpp"
#include "swg/invariants.hpp"
#include "swg/io.hpp"
#include "swg/switching.hpp"

namespace {

using namespace swg;

std::string side_to_string(VertexSet side, int n) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < n; ++v)
    if ((side >> v) & 1u) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
  return s + "}";
}

Catalog obtain_catalog(int n, Method method, const std::string& cache_dir,
                       bool allow_large) {
  std::string file;
  if (!cache_dir.empty() && method == Method::Inductive) {
    file = (std::filesystem::path(cache_dir) / catalog_cache_name(n)).string();
    if (auto cached = load_catalog(n, file)) return *cached;
  }
  Catalog cat = build_catalog(n, method, allow_large);
  if (!file.empty()) {
    std::filesystem::create_directories(cache_dir);
    save_catalog(cat, file);
  }
  return cat;
}

int run(int argc, char** argv) {
  CLI::App app{"Switch-equivalence algebra on small simple graphs"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "enumerate switch-iso types");
  int cls_n = 6;
  std::string cls_method = "inductive", cls_format = "table", cache_dir;
  bool allow_large = false;
  classify_cmd->add_option("--n", cls_n, "vertex count")->required();
  classify_cmd->add_option("--method", cls_method, "inductive | transversal | both");
  classify_cmd->add_option("--format", cls_format, "table | json | csv");
  classify_cmd->add_option("--cache-dir", cache_dir, "catalog cache directory");
  classify_cmd->add_flag("--allow-large", allow_large, "lift the n>7 transversal guard");

  auto* equiv_cmd = app.add_subcommand("equiv", "test equivalence of two graphs");
  std::string eq_a, eq_b, relation = "switch", eq_format = "table";
  equiv_cmd->add_option("file1", eq_a)->required();
  equiv_cmd->add_option("file2", eq_b)->required();
  equiv_cmd->add_option("--relation", relation, "switch | switch-iso | extended");
  equiv_cmd->add_option("--format", eq_format, "table | json");

  auto* class_cmd = app.add_subcommand("class", "list all switching-class members");
  std::string class_file;
  class_cmd->add_option("file", class_file)->required();

  auto* lc_cmd = app.add_subcommand("lc", "apply local complementation");
  std::string lc_file;
  int lc_vertex = 0;
  lc_cmd->add_option("file", lc_file)->required();
  lc_cmd->add_option("--vertex,-a", lc_vertex, "vertex to complement at")->required();

  auto* mu_cmd = app.add_subcommand("mu", "number of switch-iso types per n");
  int mu_max = 6;
  std::string mu_method = "inductive";
  mu_cmd->add_option("--max-n", mu_max, "largest n")->required();
  mu_cmd->add_option("--method", mu_method, "inductive | transversal");

  auto* count_cmd = app.add_subcommand("count-sub", "count pattern-class subsets");
  std::string count_file, pattern_name;
  count_cmd->add_option("file", count_file)->required();
  count_cmd->add_option("--pattern", pattern_name, "e.g. K3, N4, L4, C5")->required();

  auto* verify_cmd = app.add_subcommand("verify-formulas",
                                        "closed-form counts vs brute force");
  int vf_max = 10, vf_shapes = 50;
  unsigned vf_seed = 20260823;
  verify_cmd->add_option("--max-n", vf_max, "largest n");
  verify_cmd->add_option("--shapes", vf_shapes, "number of random shapes");
  verify_cmd->add_option("--seed", vf_seed, "shape generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.get_name() << ": " << e.what() << '\n';
    return 2;
  }

  if (classify_cmd->parsed()) {
    auto fmt = parse_report_format(cls_format);
    if (!fmt) throw CLI::ValidationError("--format", "unknown format " + cls_format);
    Catalog cat;
    if (cls_method == "inductive") {
      cat = obtain_catalog(cls_n, Method::Inductive, cache_dir, allow_large);
    } else if (cls_method == "transversal") {
      cat = obtain_catalog(cls_n, Method::Transversal, cache_dir, allow_large);
    } else if (cls_method == "both") {
      cat = obtain_catalog(cls_n, Method::Inductive, cache_dir, allow_large);
      Catalog other = build_catalog(cls_n, Method::Transversal, allow_large);
      if (cat.index != other.index) {
        std::cerr << "method disagreement: inductive found " << cat.types.size()
                  << " types, transversal " << other.types.size() << "\n";
        return 1;
      }
    } else {
      throw CLI::ValidationError("--method", "unknown method " + cls_method);
    }
    std::cout << render_catalog(cat, *fmt);
    return 0;
  }

  if (equiv_cmd->parsed()) {
    Graph a = read_graph_file(eq_a), b = read_graph_file(eq_b);
    bool related = false;
    std::optional<BipartitionWitness> witness;
    if (relation == "switch") {
      witness = switch_equivalent(a, b);
      related = witness.has_value();
    } else if (relation == "switch-iso") {
      related = switch_iso_equivalent(a, b);
    } else if (relation == "extended") {
      related = extended_equivalent(a, b);
    } else {
      throw CLI::ValidationError("--relation", "unknown relation " + relation);
    }
    if (eq_format == "json") {
      nlohmann::json j{{"relation", relation}, {"equivalent", related}};
      if (witness) j["side"] = side_to_string(witness->side, a.order());
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (related ? "equivalent" : "not equivalent");
      if (witness) std::cout << " side=" << side_to_string(witness->side, a.order());
      std::cout << '\n';
    }
    return related ? 0 : 1;
  }

  if (class_cmd->parsed()) {
    Graph g = read_graph_file(class_file);
    for (const Graph& member : switch_class(g))
      std::cout << write_graph6(member) << '\n';
    return 0;
  }

  if (lc_cmd->parsed()) {
    Graph g = read_graph_file(lc_file);
    std::cout << write_graph6(local_complement(g, lc_vertex)) << '\n';
    return 0;
  }

  if (mu_cmd->parsed()) {
    Method method = mu_method == "transversal" ? Method::Transversal : Method::Inductive;
    for (int n = 1; n <= mu_max; ++n) {
      std::cout << mu(n, method);
      std::cout << (n == mu_max ? '\n' : ' ');
    }
    return 0;
  }

  if (count_cmd->parsed()) {
    Graph g = read_graph_file(count_file);
    PatternClass pattern = named_pattern(pattern_name);
    std::cout << count_sub(g, pattern) << '\n';
    return 0;
  }

  if (verify_cmd->parsed())
    return verify_formulas(vf_max, vf_shapes, vf_seed, std::cout) ? 0 : 1;

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
