#ifndef SWG_IO_HPP
#define SWG_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "swg/classify.hpp"
#include "swg/graph.hpp"

namespace swg {

/// Edge-list format: header "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// Reads one graph from a file ("-" for standard input). Lines starting
/// with a digit are treated as edge lists, anything else as graph6 (digits
/// never occur in graph6 bytes).
Graph read_graph_file(const std::string& path);
Graph read_graph_stream(std::istream& in);

enum class ReportFormat { Table, Json, Csv };

std::optional<ReportFormat> parse_report_format(const std::string& name);

/// Renders a catalog: one row per type, in catalog (key) order.
std::string render_catalog(const Catalog& catalog, ReportFormat format);

inline constexpr int kCatalogSchemaVersion = 1;

/// Catalog cache file name for n, e.g. "catalog-n6.v1.json".
std::string catalog_cache_name(int n);

void save_catalog(const Catalog& catalog, const std::string& file);

/// Loads a cached catalog; absent on missing file or schema mismatch.
std::optional<Catalog> load_catalog(int n, const std::string& file);

}  // namespace swg

#endif
