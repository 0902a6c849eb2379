#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subcolor/geometry.h"

namespace subcolor {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
/// Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    /// Duplicate edges are merged; self loops and out-of-range ends throw.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// Edge uv iff disks_intersect. Requires ids 0..n-1; vertex v is the disk with id v.
Graph build_intersection_graph(const DiskInstance& instance);

using Color = std::size_t;

/// Total map vertex -> color.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}
    Coloring(std::initializer_list<Color> colors) : colors_(colors) {}
    Coloring(std::size_t n, Color fill) : colors_(n, fill) {}

    std::size_t size() const { return colors_.size(); }
    Color operator[](Vertex v) const { return colors_[v]; }
    Color& operator[](Vertex v) { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }

    /// 1 + max color, 0 when empty.
    std::size_t num_colors() const;
    /// Number of distinct colors actually used.
    std::size_t distinct_colors() const;
    /// Renumbers colors by first appearance over vertex ids.
    Coloring canonical() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
};

/// Induced path a - b - c (b in the middle, a and c non-adjacent).
struct P3 {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;
    friend bool operator==(const P3&, const P3&) = default;
};

/// An induced P3, or nullopt when every component is a clique. O(n + m).
std::optional<P3> find_induced_p3(const Graph& g);
bool is_cluster_graph(const Graph& g);

/// A P3 inside one color class, or nullopt. Throws InputError if the
/// coloring does not cover exactly the vertices of g.
std::optional<P3> find_monochromatic_p3(const Graph& g, const Coloring& c);
bool validate_subcoloring(const Graph& g, const Coloring& c);

/// Components with sorted members, ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace subcolor
