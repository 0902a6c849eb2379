#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcolor/geometry.h"
#include "subcolor/graph.h"

namespace subcolor {

/// Shortest decimal that reads back to the same double.
std::string format_number(double v);

/// "kind <general|unit|delta>" then one "disk <id> <x> <y> <r>" per line.
/// Blank lines and lines starting with '#' are skipped.
DiskInstance parse_instance(std::string_view text);
std::string serialize_instance(const DiskInstance& instance);

/// One "<vertex> <color>" line per vertex, colors densified before writing.
std::string serialize_coloring(const Coloring& coloring);
/// Every vertex 0..n-1 must appear exactly once.
Coloring parse_coloring(std::string_view text, std::size_t n);

/// "graph <n>" then "edge <u> <v>" lines.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

struct SvgOptions {
    bool axes = false;
    std::vector<double> horizontal_lines;
    std::vector<double> vertical_lines;
};

std::string render_svg(const DiskInstance& instance, const std::optional<Coloring>& coloring,
                       const SvgOptions& options = {});

struct RunReport {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t m = 0;
    InstanceKind kind = InstanceKind::general;
    std::size_t colors = 0;
    std::optional<std::size_t> lower_bound;
    std::optional<double> wall_seconds;
    bool valid = false;

    /// Flat "key value" lines.
    std::string to_text() const;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace subcolor
