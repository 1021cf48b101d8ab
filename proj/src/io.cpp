#include "swg/io.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "swg/graph6.hpp"

namespace swg {

Graph parse_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: bad header, expected 'n m'");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    g.set_edge(u, v);
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_stream(std::istream& in) {
  std::string line;
  do {
    if (!std::getline(in, line)) throw std::runtime_error("no graph in input");
  } while (line.find_first_not_of(" \t\r\n") == std::string::npos);
  std::size_t start = line.find_first_not_of(" \t");
  if (std::isdigit(static_cast<unsigned char>(line[start]))) {
    std::ostringstream all;
    all << line << '\n' << in.rdbuf();
    std::istringstream full(all.str());
    return parse_edge_list(full);
  }
  return parse_graph6(line);
}

Graph read_graph_file(const std::string& path) {
  if (path == "-") return read_graph_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph_stream(in);
}

std::optional<ReportFormat> parse_report_format(const std::string& name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

namespace {

nlohmann::json catalog_to_json(const Catalog& catalog) {
  nlohmann::json types = nlohmann::json::array();
  for (const TypeRecord& t : catalog.types) {
    types.push_back({{"name", t.name},
                     {"aliases", t.aliases},
                     {"g6", write_graph6(t.representative)},
                     {"profile",
                      {{"k3", t.profile.k3},
                       {"n3", t.profile.n3},
                       {"k4", t.profile.k4},
                       {"n4", t.profile.n4},
                       {"l4", t.profile.l4}}}});
  }
  return {{"schema", kCatalogSchemaVersion}, {"n", catalog.n}, {"types", types}};
}

}  // namespace

std::string render_catalog(const Catalog& catalog, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json:
      out << catalog_to_json(catalog).dump(2) << '\n';
      break;
    case ReportFormat::Csv: {
      out << "index,name,g6,k3,n3,k4,n4,l4,aliases\n";
      int i = 1;
      for (const TypeRecord& t : catalog.types) {
        out << i++ << ',' << t.name << ',' << write_graph6(t.representative) << ','
            << t.profile.k3 << ',' << t.profile.n3 << ',' << t.profile.k4 << ','
            << t.profile.n4 << ',' << t.profile.l4 << ',';
        for (std::size_t a = 0; a < t.aliases.size(); ++a)
          out << (a ? ";" : "") << t.aliases[a];
        out << '\n';
      }
      break;
    }
    case ReportFormat::Table: {
      out << std::left << std::setw(4) << "#" << std::setw(18) << "name"
          << std::setw(10) << "g6" << std::right << std::setw(4) << "k3"
          << std::setw(4) << "n3" << std::setw(4) << "k4" << std::setw(4) << "n4"
          << std::setw(4) << "l4" << "  aliases\n";
      int i = 1;
      for (const TypeRecord& t : catalog.types) {
        out << std::left << std::setw(4) << i++ << std::setw(18) << t.name
            << std::setw(10) << write_graph6(t.representative) << std::right
            << std::setw(4) << t.profile.k3 << std::setw(4) << t.profile.n3
            << std::setw(4) << t.profile.k4 << std::setw(4) << t.profile.n4
            << std::setw(4) << t.profile.l4 << "  ";
        for (std::size_t a = 0; a < t.aliases.size(); ++a)
          out << (a ? ", " : "") << t.aliases[a];
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string catalog_cache_name(int n) {
  return "catalog-n" + std::to_string(n) + ".v" +
         std::to_string(kCatalogSchemaVersion) + ".json";
}

void save_catalog(const Catalog& catalog, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file);
  out << catalog_to_json(catalog).dump(2) << '\n';
}

std::optional<Catalog> load_catalog(int n, const std::string& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("schema") != kCatalogSchemaVersion || j.at("n") != n)
      return std::nullopt;
    Catalog cat;
    cat.n = n;
    for (const auto& jt : j.at("types")) {
      TypeRecord t;
      t.representative = parse_graph6(jt.at("g6").get<std::string>());
      t.key = ClassKey{n, t.representative.bits()};
      t.name = jt.at("name").get<std::string>();
      t.aliases = jt.at("aliases").get<std::vector<std::string>>();
      const auto& p = jt.at("profile");
      t.profile = {p.at("k3"), p.at("n3"), p.at("k4"), p.at("n4"), p.at("l4")};
      cat.index.emplace(t.key, static_cast<int>(cat.types.size()));
      cat.types.push_back(std::move(t));
    }
    return cat;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace swg
