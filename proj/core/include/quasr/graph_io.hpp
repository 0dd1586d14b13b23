#pragma once

#include <stdexcept>
#include <string>

#include "quasr/generators.hpp"
#include "quasr/graph.hpp"

namespace quasr {

// Parse/format error for the edge-list and sidecar formats. Messages name
// the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. ASCII, LF line endings.
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// Block metadata sidecar: {"blocks": [[indices...], ...]}.
BlockLayout load_blocks(const std::string& path);
void save_blocks(const BlockLayout& layout, const std::string& path);

}  // namespace quasr
