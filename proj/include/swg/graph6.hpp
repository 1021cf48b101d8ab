#ifndef SWG_GRAPH6_HPP
#define SWG_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "swg/graph.hpp"

namespace swg {

struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

/// Standard graph6 line (without trailing newline) for n <= 16.
std::string write_graph6(const Graph& g);

/// Inverse of write_graph6; strict about length, byte range and padding.
Graph parse_graph6(std::string_view line);

}  // namespace swg

#endif
