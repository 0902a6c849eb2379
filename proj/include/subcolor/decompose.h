#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "subcolor/delta_disk.h"
#include "subcolor/geometry.h"
#include "subcolor/graph.h"

namespace subcolor {

struct HorizontalSplit {
    double y_median = 0.0;
    std::vector<Vertex> S, A, B;  // on the line, strictly below, strictly above
};

/// Disks meeting the line y = lower median of the subset's ordinates.
HorizontalSplit horizontal_median_separator(const DiskInstance& instance,
                                            const std::vector<Vertex>& subset);

/// A disk moved into canonical delta position for one quadrant piece.
Disk transform_to_delta(const Disk& disk, const Point& P, int quadrant);

struct DeltaPiece {
    /// Original vertex ids; vertex i of `rep` is members[i].
    std::vector<Vertex> members;
    DeltaRepresentation rep;
};

struct VerticalSplit {
    double x_median = 0.0;
    Point P;
    std::vector<Vertex> crossing;              // S'
    std::array<DeltaPiece, 4> quadrant;        // Q1 (+,+), Q2 (-,+), Q3 (-,-), Q4 (+,-)
    std::vector<Vertex> V5;                    // crossing disks containing P
    std::vector<Vertex> left, right;           // A', B'
};

/// Splits disks that all meet the horizontal line y = y_line.
VerticalSplit vertical_split_linear(const DiskInstance& instance, const std::vector<Vertex>& subset,
                                    double y_line);

struct LinearNode {
    std::size_t disk_depth = 0;
    std::size_t linear_depth = 0;
    std::vector<Vertex> members;
    VerticalSplit split;
    int left_child = -1;   // index into DecompositionTree::linear
    int right_child = -1;
};

struct DiskNode {
    std::size_t depth = 0;
    std::vector<Vertex> members;
    HorizontalSplit split;
    int linear_root = -1;  // index into DecompositionTree::linear, -1 if S is empty
    int below_child = -1;  // index into DecompositionTree::disk
    int above_child = -1;
};

struct DecompositionTree {
    std::vector<DiskNode> disk;      // disk[0] is the root when non-empty
    std::vector<LinearNode> linear;
};

DecompositionTree decompose(const DiskInstance& instance);

/// Problems found in the tree (balance, empty separators, cross edges,
/// delta validity, V5 cliques, coverage, adjacency preserved by pieces).
/// Empty when the tree is sound.
std::vector<std::string> verify_tree(const DiskInstance& instance, const Graph& g,
                                     const DecompositionTree& tree);

/// Text dump of the tree, one node per line.
std::string describe_tree(const DecompositionTree& tree);

Coloring color_disk_log3(const DiskInstance& instance);

struct DiskApprox {
    Coloring coloring;
    std::size_t lower_bound = 0;
    std::size_t groups = 0;
};

DiskApprox color_disk_approx(const DiskInstance& instance);

}  // namespace subcolor
