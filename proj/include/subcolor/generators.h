#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subcolor/delta_disk.h"
#include "subcolor/geometry.h"
#include "subcolor/graph.h"

namespace subcolor {

/// Closed intervals with pairwise distinct endpoints. Coinciding endpoints
/// are pulled apart at construction with a fixed-seed perturbation.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<std::pair<double, double>> intervals);

    std::size_t size() const { return iv_.size(); }
    const std::vector<std::pair<double, double>>& intervals() const { return iv_; }

private:
    std::vector<std::pair<double, double>> iv_;
};

Graph interval_graph(const IntervalSet& intervals);

/// Starts uniform in [0, 100], lengths uniform in [5, 40].
IntervalSet gen_random_intervals(std::size_t n, std::uint64_t seed);

struct BCInstance {
    Graph graph;
    /// Same vertex numbering as `graph`.
    DiskInstance disks;
};

/// BC(1) is one vertex; BC(k) is a universal vertex over two copies of
/// BC(k-1). Vertices: first copy, second copy, universal vertex last.
BCInstance gen_bc(std::size_t k);

/// Delta representation with disks centred on the diagonal whose diagonal
/// chords realize the intervals. Throws EmbeddingError when floating point
/// cannot reproduce the interval graph.
DeltaRepresentation gen_interval_to_delta(const IntervalSet& intervals);

enum class GadgetKind { ladder, forbidding, clause, matched_cliques, k444, c5, c4 };

struct GadgetSpec {
    GadgetKind kind = GadgetKind::c5;
    std::size_t param = 0;  // rungs for ladder/forbidding, clique size for matched_cliques
};

GadgetSpec parse_gadget(const std::string& name, std::size_t param);

/// Vertex numbering:
///   ladder, forbidding: a_i = 2i, b_i = 2i + 1 (rungs from 0); ports a_0, b_0
///   clause: C5 on 0..4, then two F27 gadgets with ports (3,4) and (4,0)
///   matched_cliques: a_i = i, b_i = n + i
///   k444: parts {0..3}, {4..7}, {8..11}
///   c5, c4: cycle in id order
Graph gen_gadget(const GadgetSpec& spec);

/// Uniform centres in [0, width]^2 kept 1e-6 away from the unit grid and
/// from hexagon boundaries.
DiskInstance gen_random_unit(std::size_t n, double width, std::uint64_t seed);

/// Distances log-uniform in [d_min, d_max], angle in (0, 90) degrees,
/// radius uniform in [max(x, y), d (1 - 1e-6)].
DiskInstance gen_random_delta(std::size_t n, double d_min, double d_max, std::uint64_t seed);

/// Uniform centres in [0, width]^2, log-uniform radii. rmin = rmax = 0.5
/// yields a unit instance.
DiskInstance gen_random_disks(std::size_t n, double rmin, double rmax, double width,
                              std::uint64_t seed);

}  // namespace subcolor
