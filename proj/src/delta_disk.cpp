#include "subcolor/delta_disk.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "subcolor/error.h"

namespace subcolor {

bool is_delta_disk(const Disk& d) {
    const double x = d.center.x;
    const double y = d.center.y;
    return x > 0.0 && y > 0.0 && std::max(x, y) <= d.radius &&
           d.radius * d.radius < x * x + y * y;
}

std::optional<Vertex> find_invalid_delta_disk(const DiskInstance& instance) {
    for (const Disk& d : instance.disks())
        if (!is_delta_disk(d)) return d.id;
    return std::nullopt;
}

bool validate_delta(const DiskInstance& instance) {
    return !find_invalid_delta_disk(instance).has_value();
}

DeltaRepresentation::DeltaRepresentation(const DiskInstance& instance) {
    if (auto bad = find_invalid_delta_disk(instance))
        throw InputError("disk " + std::to_string(*bad) + " is not a delta disk");
    instance_ = DiskInstance(InstanceKind::delta, instance.disks());
    if (!instance_.has_dense_ids()) throw InputError("delta representation needs ids 0..n-1");
    d_.resize(size());
    for (const Disk& disk : instance_.disks())
        d_[disk.id] = std::hypot(disk.center.x, disk.center.y);
}

bool cocomp_precedes(const DeltaRepresentation& rep, Vertex u, Vertex v) {
    const Disk& a = rep.disk(u);
    const Disk& b = rep.disk(v);
    return a.center.x < b.center.x && a.center.y < b.center.y && !disks_intersect(a, b);
}

namespace {

bool is_clique(const DeltaRepresentation& rep, const std::vector<Vertex>& part) {
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
            if (!disks_intersect(rep.disk(part[i]), rep.disk(part[j]))) return false;
    return true;
}

}  // namespace

SeparatorParts delta_separator(const DeltaRepresentation& rep, const std::vector<Vertex>& subset) {
    if (subset.empty()) throw InputError("separator of an empty vertex set");
    std::vector<double> xs;
    xs.reserve(subset.size());
    for (Vertex v : subset) xs.push_back(rep.disk(v).center.x);

    SeparatorParts parts;
    const double alpha = median_coordinate(xs);
    parts.alpha = alpha;
    parts.X = Point(alpha, alpha);
    parts.Xprime = Point(alpha / 2, alpha / 2);

    for (Vertex v : subset) {
        const Disk& d = rep.disk(v);
        const double x = d.center.x;
        const double y = d.center.y;
        if (x < alpha / 2 && y < alpha / 2) {
            (point_in_disk(parts.Xprime, d) ? parts.V3 : parts.V1).push_back(v);
        } else if (x > alpha && y > alpha) {
            (point_in_disk(parts.X, d) ? parts.V4 : parts.V2).push_back(v);
        } else {
            parts.V3.push_back(v);
        }
    }

    const std::size_t half = subset.size() / 2;
    if (parts.V1.size() > half || parts.V2.size() > half)
        throw InvariantViolation("delta separator is not balanced");
    if (!is_clique(rep, parts.V3) || !is_clique(rep, parts.V4))
        throw InvariantViolation("delta separator part is not a clique");
    for (Vertex u : parts.V1)
        for (Vertex v : parts.V2)
            if (disks_intersect(rep.disk(u), rep.disk(v)))
                throw InvariantViolation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                         " crosses the delta separator");
    return parts;
}

SeparatorParts delta_separator(const DeltaRepresentation& rep) {
    std::vector<Vertex> all(rep.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    return delta_separator(rep, all);
}

namespace {

void color_log_rec(const DeltaRepresentation& rep, const std::vector<Vertex>& subset,
                   std::size_t depth, Coloring& out) {
    if (subset.empty()) return;
    const SeparatorParts parts = delta_separator(rep, subset);
    for (Vertex v : parts.V3) out[v] = 2 * depth;
    for (Vertex v : parts.V4) out[v] = 2 * depth + 1;
    color_log_rec(rep, parts.V1, depth + 1, out);
    color_log_rec(rep, parts.V2, depth + 1, out);
}

void require_valid(const Graph& g, const Coloring& c, const char* what) {
    if (auto p3 = find_monochromatic_p3(g, c))
        throw InvariantViolation(std::string(what) + " produced a monochromatic P3 " +
                                 std::to_string(p3->a) + "-" + std::to_string(p3->b) + "-" +
                                 std::to_string(p3->c));
}

}  // namespace

Coloring delta_color_log(const DeltaRepresentation& rep) {
    Coloring c(rep.size(), 0);
    std::vector<Vertex> all(rep.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    color_log_rec(rep, all, 0, c);
    c = c.canonical();
    require_valid(build_intersection_graph(rep.instance()), c, "delta_color_log");
    return c;
}

bool vertex_contains(const Graph& g, Vertex u, Vertex v) {
    if (u == v) return true;
    if (!g.adjacent(u, v)) return false;
    const auto& nv = g.neighbors(v);
    for (Vertex w : g.neighbors(u))
        if (w != v && !std::binary_search(nv.begin(), nv.end(), w)) return false;
    return true;
}

LayerPartition external_layers(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<char> alive(n, 1);
    std::vector<std::size_t> mark(n, static_cast<std::size_t>(-1));
    std::size_t remaining = n;
    LayerPartition out;

    while (remaining > 0) {
        std::vector<Vertex> layer;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            mark[v] = v;
            for (Vertex w : g.neighbors(v))
                if (alive[w]) mark[w] = v;
            // u is contained in v iff every live closed neighbour of u is marked.
            std::vector<Vertex> contained;
            for (Vertex u : g.neighbors(v)) {
                if (!alive[u]) continue;
                bool inside = true;
                for (Vertex w : g.neighbors(u))
                    if (alive[w] && w != v && mark[w] != v) {
                        inside = false;
                        break;
                    }
                if (inside) contained.push_back(u);
            }
            bool clique = true;
            for (std::size_t i = 0; i < contained.size() && clique; ++i)
                for (std::size_t j = i + 1; j < contained.size() && clique; ++j)
                    clique = g.adjacent(contained[i], contained[j]);
            // v itself is adjacent to everything it contains.
            if (clique) layer.push_back(v);
            mark[v] = static_cast<std::size_t>(-1);
            for (Vertex w : g.neighbors(v)) mark[w] = static_cast<std::size_t>(-1);
        }
        if (layer.empty())
            throw InvariantViolation("external layer peeling stalled with " +
                                     std::to_string(remaining) + " vertices left");
        for (Vertex v : layer) alive[v] = 0;
        remaining -= layer.size();
        out.layers.push_back(std::move(layer));
    }
    return out;
}

std::vector<Vertex> greedy_mis_by_radius(const DeltaRepresentation& rep,
                                         const std::vector<Vertex>& subset) {
    std::vector<Vertex> order = subset;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const double ra = rep.disk(a).radius;
        const double rb = rep.disk(b).radius;
        return ra < rb || (ra == rb && a < b);
    });
    std::vector<Vertex> chosen;
    std::vector<char> removed(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (removed[i]) continue;
        chosen.push_back(order[i]);
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!removed[j] && disks_intersect(rep.disk(order[i]), rep.disk(order[j])))
                removed[j] = 1;
    }
    return chosen;
}

std::vector<SectorClique> sector_clique_partition(const DeltaRepresentation& rep,
                                                  const std::vector<Vertex>& U, Vertex base) {
    const Disk& b = rep.disk(base);
    std::array<std::vector<Vertex>, 6> sectors;
    for (Vertex u : U) {
        const Disk& d = rep.disk(u);
        if (u != base && (!disks_intersect(d, b) || d.radius < b.radius))
            throw InvariantViolation("vertex " + std::to_string(u) +
                                     " does not meet the sector precondition for base " +
                                     std::to_string(base));
        const double dx = d.center.x - b.center.x;
        const double dy = d.center.y - b.center.y;
        int s = 0;
        if (dx != 0.0 || dy != 0.0) {
            double angle = std::atan2(dy, dx);
            if (angle < 0) angle += 2 * std::numbers::pi;
            s = std::min(5, static_cast<int>(angle / (std::numbers::pi / 3)));
        }
        sectors[static_cast<std::size_t>(s)].push_back(u);
    }
    std::vector<SectorClique> out;
    for (int s = 0; s < 6; ++s) {
        auto& members = sectors[static_cast<std::size_t>(s)];
        if (members.empty()) continue;
        if (!is_clique(rep, members))
            throw InvariantViolation("sector " + std::to_string(s) + " around vertex " +
                                     std::to_string(base) + " is not a clique");
        out.push_back({s, std::move(members)});
    }
    return out;
}

namespace {
constexpr std::size_t mis_period = 9;
}

DeltaApprox delta_color_approx(const DeltaRepresentation& rep) {
    const Graph g = build_intersection_graph(rep.instance());
    const LayerPartition layers = external_layers(g);
    DeltaApprox out;
    out.k = layers.k();
    Coloring raw(rep.size(), 0);

    for (std::size_t l = 0; l < layers.k(); ++l) {
        DeltaLayerTrace t;
        t.members = layers.layers[l];
        t.mis = greedy_mis_by_radius(rep, t.members);
        t.bucket.assign(t.members.size(), 0);
        t.sector.assign(t.members.size(), 0);

        std::vector<std::vector<Vertex>> U(t.mis.size());
        for (std::size_t m = 0; m < t.members.size(); ++m) {
            const Vertex v = t.members[m];
            std::size_t i = 0;
            while (t.mis[i] != v && !g.adjacent(v, t.mis[i])) ++i;
            t.bucket[m] = i;
            U[i].push_back(v);
        }
        std::vector<int> sector_of(rep.size(), 0);
        for (std::size_t i = 0; i < U.size(); ++i)
            for (const SectorClique& sc : sector_clique_partition(rep, U[i], t.mis[i]))
                for (Vertex v : sc.members) sector_of[v] = sc.sector;
        for (std::size_t m = 0; m < t.members.size(); ++m) {
            const Vertex v = t.members[m];
            t.sector[m] = sector_of[v];
            raw[v] = l * (mis_period * 6) + (t.bucket[m] % mis_period) * 6 +
                     static_cast<std::size_t>(sector_of[v]);
        }
        out.trace.push_back(std::move(t));
    }
    out.coloring = raw.canonical();
    require_valid(g, out.coloring, "delta_color_approx");
    return out;
}

}  // namespace subcolor
