#include "subcolor/graph.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "subcolor/error.h"

namespace subcolor {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw InputError("self loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        total += list.size();
    }
    g.m_ = total / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> local(adj_.size(), none);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= adj_.size() || local[vertices[i]] != none)
            throw InputError("induced: vertex list must be distinct and in range");
        local[vertices[i]] = i;
    }
    Graph h(vertices.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : adj_[vertices[i]])
            if (local[w] != none) h.adj_[i].push_back(local[w]);
        std::sort(h.adj_[i].begin(), h.adj_[i].end());
        total += h.adj_[i].size();
    }
    h.m_ = total / 2;
    return h;
}

Graph build_intersection_graph(const DiskInstance& instance) {
    if (!instance.has_dense_ids())
        throw InputError("intersection graph needs disk ids 0..n-1");
    const auto& disks = instance.disks();
    const std::size_t n = disks.size();

    // Sweep over x: disks sorted by left extent, candidate pairs overlap in x.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto left = [&](std::size_t i) { return disks[i].center.x - disks[i].radius; };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return left(a) < left(b) || (left(a) == left(b) && a < b);
    });

    std::vector<Edge> edges;
    for (std::size_t p = 0; p < n; ++p) {
        const Disk& a = disks[order[p]];
        const double right = a.center.x + a.radius;
        // The pruning test is inexact; keep a relative slack so the squared
        // predicate alone decides near-tangent pairs.
        const double slack = 1e-9 * (std::abs(a.center.x) + a.radius + 1.0);
        for (std::size_t q = p + 1; q < n; ++q) {
            const Disk& b = disks[order[q]];
            if (left(order[q]) > right + slack + 1e-9 * std::abs(left(order[q])))
                break;
            if (disks_intersect(a, b)) edges.emplace_back(a.id, b.id);
        }
    }
    return Graph::from_edges(n, edges);
}

std::size_t Coloring::num_colors() const {
    if (colors_.empty()) return 0;
    return *std::max_element(colors_.begin(), colors_.end()) + 1;
}

std::size_t Coloring::distinct_colors() const {
    std::vector<Color> c = colors_;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

Coloring Coloring::canonical() const {
    std::map<Color, Color> seen;
    std::vector<Color> out(colors_.size());
    for (std::size_t v = 0; v < colors_.size(); ++v)
        out[v] = seen.try_emplace(colors_[v], seen.size()).first->second;
    return Coloring(std::move(out));
}

namespace {

/// Shortest path from `from` to `to` restricted to vertices with
/// keep(w); returns the first three vertices (an induced P3).
template <class Keep>
P3 p3_on_shortest_path(const Graph& g, Vertex from, Vertex to, Keep keep) {
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(g.size(), none);
    std::vector<Vertex> queue{to};
    parent[to] = to;
    // BFS from `to` so that following parents from `from` walks a shortest path.
    for (std::size_t head = 0; head < queue.size() && parent[from] == none; ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (parent[w] == none && keep(w)) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    Vertex b = parent[from];
    return P3{from, b, parent[b]};
}

template <class SameClass>
std::optional<P3> find_p3_in_classes(const Graph& g, SameClass same) {
    const std::size_t n = g.size();
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, none);
    std::vector<Vertex> members;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != none) continue;
        members.clear();
        members.push_back(s);
        comp[s] = s;
        for (std::size_t head = 0; head < members.size(); ++head) {
            Vertex u = members[head];
            for (Vertex w : g.neighbors(u)) {
                if (comp[w] == none && same(u, w)) {
                    comp[w] = s;
                    members.push_back(w);
                }
            }
        }
        // Clique iff every member sees all others inside its class component.
        for (Vertex u : members) {
            std::size_t inside = 0;
            for (Vertex w : g.neighbors(u))
                if (comp[w] == s) ++inside;
            if (inside + 1 == members.size()) continue;
            Vertex far = u;
            for (Vertex w : members) {
                if (w != u && !g.adjacent(u, w)) {
                    far = w;
                    break;
                }
            }
            return p3_on_shortest_path(g, u, far, [&](Vertex w) { return comp[w] == s; });
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<P3> find_induced_p3(const Graph& g) {
    return find_p3_in_classes(g, [](Vertex, Vertex) { return true; });
}

bool is_cluster_graph(const Graph& g) { return !find_induced_p3(g).has_value(); }

std::optional<P3> find_monochromatic_p3(const Graph& g, const Coloring& c) {
    if (c.size() != g.size())
        throw InputError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                         std::to_string(g.size()));
    return find_p3_in_classes(g, [&](Vertex u, Vertex w) { return c[u] == c[w]; });
}

bool validate_subcoloring(const Graph& g, const Coloring& c) {
    return !find_monochromatic_p3(g, c).has_value();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace subcolor
