#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subcolor/geometry.h"
#include "subcolor/graph.h"

namespace subcolor {

/// x > 0, y > 0, max(x, y) <= r < |center|: the disk meets both axes and
/// misses the origin.
bool is_delta_disk(const Disk& d);

/// Id of the first disk (in list order) breaking the delta constraints.
std::optional<Vertex> find_invalid_delta_disk(const DiskInstance& instance);
bool validate_delta(const DiskInstance& instance);

/// A validated delta instance with dense ids and cached distances to the origin.
class DeltaRepresentation {
public:
    DeltaRepresentation() = default;
    /// Throws InputError unless every disk is a delta disk and ids are 0..n-1.
    explicit DeltaRepresentation(const DiskInstance& instance);

    const DiskInstance& instance() const { return instance_; }
    std::size_t size() const { return instance_.size(); }
    const Disk& disk(Vertex v) const { return instance_.disk(v); }
    double d(Vertex v) const { return d_[v]; }

private:
    DiskInstance instance_;
    std::vector<double> d_;
};

/// u before v: strictly smaller on both coordinates and disjoint.
bool cocomp_precedes(const DeltaRepresentation& rep, Vertex u, Vertex v);

struct SeparatorParts {
    std::vector<Vertex> V1, V2, V3, V4;
    double alpha = 0.0;
    Point X;
    Point Xprime;
};

/// Two-clique separator around the median abscissa. Runs on `subset`
/// (all vertices when omitted) and checks its own invariants.
SeparatorParts delta_separator(const DeltaRepresentation& rep, const std::vector<Vertex>& subset);
SeparatorParts delta_separator(const DeltaRepresentation& rep);

/// Two fresh colors per separator level, sides recursed with a shared palette.
Coloring delta_color_log(const DeltaRepresentation& rep);

/// N[u] is a subset of N[v].
bool vertex_contains(const Graph& g, Vertex u, Vertex v);

struct LayerPartition {
    std::vector<std::vector<Vertex>> layers;
    std::size_t k() const { return layers.size(); }
};

/// Peels off the external vertices (those whose contained vertices form a
/// clique) of the remaining graph until nothing is left.
LayerPartition external_layers(const Graph& g);

/// Maximal independent set picked by increasing (radius, id) inside subset.
std::vector<Vertex> greedy_mis_by_radius(const DeltaRepresentation& rep,
                                         const std::vector<Vertex>& subset);

struct SectorClique {
    int sector = 0;  // 0..5, counter-clockwise from the positive x axis
    std::vector<Vertex> members;
};

/// Splits U by the 60-degree sector of each centre around the base centre.
/// Every part is checked to be a clique.
std::vector<SectorClique> sector_clique_partition(const DeltaRepresentation& rep,
                                                  const std::vector<Vertex>& U, Vertex base);

struct DeltaLayerTrace {
    std::vector<Vertex> members;
    std::vector<Vertex> mis;
    /// For each member (same order): index into mis of its bucket, and its sector.
    std::vector<std::size_t> bucket;
    std::vector<int> sector;
};

struct DeltaApprox {
    Coloring coloring;
    /// Number of external layers; a lower bound on the subchromatic number.
    std::size_t k = 0;
    std::vector<DeltaLayerTrace> trace;
};

/// Colors each vertex by (layer, bucket mod 9, sector), flattened.
DeltaApprox delta_color_approx(const DeltaRepresentation& rep);

}  // namespace subcolor
