#include "subcolor/generators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "subcolor/error.h"
#include "subcolor/unit_disk.h"

namespace subcolor {
namespace {

/// Seeded uniform reals built from raw 64-bit draws, so results do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    double log_uniform(double lo, double hi) {
        if (lo == hi) return lo;
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

private:
    std::mt19937_64 gen_;
};

constexpr double boundary_margin = 1e-6;

/// Distance gap between the nearest and second nearest hexagon centres.
double hex_boundary_gap(const Point& p) {
    const HexCell c = hex_cell_of(p);
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    for (std::int64_t i = c.i - 2; i <= c.i + 2; ++i)
        for (std::int64_t j = c.j - 2; j <= c.j + 2; ++j) {
            const double d = std::sqrt(squared_distance(p, hex_center({i, j})));
            if (d < best) {
                second = best;
                best = d;
            } else if (d < second) {
                second = d;
            }
        }
    return second - best;
}

bool near_boundary(const Point& p) {
    return std::abs(p.x - std::round(p.x)) < boundary_margin ||
           std::abs(p.y - std::round(p.y)) < boundary_margin ||
           hex_boundary_gap(p) < boundary_margin;
}

Point stable_point(Rng& rng, double width) {
    // Boxes thinner than the margin cannot avoid the grid; take the last draw.
    for (int attempt = 0;; ++attempt) {
        Point p(rng.uniform(0.0, width), rng.uniform(0.0, width));
        if (!near_boundary(p) || attempt == 1000) return p;
    }
}

}  // namespace

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> intervals)
    : iv_(std::move(intervals)) {
    for (auto [l, r] : iv_)
        if (!std::isfinite(l) || !std::isfinite(r) || !(l < r))
            throw InputError("interval endpoints must be finite with left < right");

    Rng rng(0x9e3779b97f4a7c15ULL);
    for (int round = 0;; ++round) {
        std::vector<std::pair<double, std::size_t>> ends;  // value, 2*index + side
        for (std::size_t i = 0; i < iv_.size(); ++i) {
            ends.emplace_back(iv_[i].first, 2 * i);
            ends.emplace_back(iv_[i].second, 2 * i + 1);
        }
        std::sort(ends.begin(), ends.end());
        bool clash = false;
        for (std::size_t e = 1; e < ends.size(); ++e) {
            if (ends[e].first != ends[e - 1].first) continue;
            clash = true;
            const double v = ends[e].first;
            auto& iv = iv_[ends[e].second / 2];
            double shift = (iv.second - iv.first) * 1e-9 * (0.5 + rng.unit());
            // Move the endpoint outwards, never past a neighbouring value, so
            // every overlap (including touching) survives.
            if (ends[e].second % 2 == 0) {
                auto below = std::find_if(ends.rbegin(), ends.rend(), [v](const auto& x) { return x.first < v; });
                if (below != ends.rend()) shift = std::min(shift, (v - below->first) / 2);
                iv.first = v - shift;
            } else {
                auto above = std::find_if(ends.begin(), ends.end(), [v](const auto& x) { return x.first > v; });
                if (above != ends.end()) shift = std::min(shift, (above->first - v) / 2);
                iv.second = v + shift;
            }
            break;
        }
        if (!clash) break;
        if (round > 4 * static_cast<int>(iv_.size()) + 64)
            throw InputError("could not separate coinciding interval endpoints");
    }
}

Graph interval_graph(const IntervalSet& intervals) {
    const auto& iv = intervals.intervals();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < iv.size(); ++i)
        for (std::size_t j = i + 1; j < iv.size(); ++j)
            if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) edges.emplace_back(i, j);
    return Graph::from_edges(iv.size(), edges);
}

IntervalSet gen_random_intervals(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<double, double>> iv;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = rng.uniform(0.0, 100.0);
        iv.emplace_back(a, a + rng.uniform(5.0, 40.0));
    }
    return IntervalSet(std::move(iv));
}

namespace {

struct RawDisk {
    double x, y, r;
};

/// Every disk meets y = 0 and y = 1, no disk contains another.
std::vector<RawDisk> bc_disks(std::size_t k) {
    if (k == 1) return {{0.0, 0.5, 1.0}};
    constexpr double scale = 2.0;
    constexpr double top = 1.9;  // big disk stays below y = 2, where the copies reach
    constexpr double gap = 0.25;
    constexpr double margin = 0.125;

    std::vector<RawDisk> first;
    for (const RawDisk& d : bc_disks(k - 1)) first.push_back({d.x * scale, d.y * scale, d.r * scale});
    // The second copy is turned half a turn about the strip centre.
    std::vector<RawDisk> second;
    for (const RawDisk& d : first) second.push_back({-d.x, scale - d.y, d.r});

    double offset = -std::numeric_limits<double>::infinity();
    for (const RawDisk& a : first)
        for (const RawDisk& b : second) {
            const double reach = a.r + b.r;
            const double dy = a.y - b.y;
            if (std::abs(dy) < reach)
                offset = std::max(offset, a.x - b.x + std::sqrt(reach * reach - dy * dy));
        }
    offset += gap;
    for (RawDisk& d : second) d.x += offset;

    std::vector<RawDisk> all = first;
    all.insert(all.end(), second.begin(), second.end());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const RawDisk& d : all) {
        const double half = std::sqrt(d.r * d.r - (1.0 - d.y) * (1.0 - d.y));
        lo = std::min(lo, d.x - half);
        hi = std::max(hi, d.x + half);
    }
    // Chord of half-width h on y = 1 with the top of the circle at y = top.
    const double h = (hi - lo) / 2 + margin;
    const double e = top - 1.0;
    const double rho = (h * h + e * e) / (2 * e);
    all.push_back({(lo + hi) / 2, top - rho, rho});
    return all;
}

void bc_edges(std::size_t k, std::size_t base, std::vector<Edge>& edges) {
    if (k == 1) return;
    const std::size_t half = (std::size_t{1} << (k - 1)) - 1;
    bc_edges(k - 1, base, edges);
    bc_edges(k - 1, base + half, edges);
    const std::size_t universal = base + 2 * half;
    for (std::size_t v = base; v < universal; ++v) edges.emplace_back(v, universal);
}

}  // namespace

BCInstance gen_bc(std::size_t k) {
    if (k < 1) throw InputError("BC(k) needs k >= 1");
    if (k > 20) throw InputError("BC(k) limited to k <= 20");
    const std::size_t n = (std::size_t{1} << k) - 1;
    std::vector<Edge> edges;
    bc_edges(k, 0, edges);
    std::vector<Disk> disks;
    const auto raw = bc_disks(k);
    for (std::size_t v = 0; v < raw.size(); ++v) disks.emplace_back(v, Point(raw[v].x, raw[v].y), raw[v].r);
    return {Graph::from_edges(n, edges), DiskInstance(InstanceKind::general, std::move(disks))};
}

DeltaRepresentation gen_interval_to_delta(const IntervalSet& intervals) {
    const auto& iv = intervals.intervals();
    const std::size_t n = iv.size();
    const Graph want = interval_graph(intervals);

    struct Event {
        double value;
        bool right;
        std::size_t index;
    };
    std::vector<Event> events;
    for (std::size_t i = 0; i < n; ++i) {
        events.push_back({iv[i].first, false, i});
        events.push_back({iv[i].second, true, i});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return a.value < b.value;
    });

    const double first = 1.0 - 1.0 / std::numbers::sqrt2;
    // r' >= K l' keeps the diagonal centre inside the disk's axis reach.
    const double K = (std::numbers::sqrt2 + 1.0) / (std::numbers::sqrt2 - 1.0);

    for (int attempt = 0; attempt <= 8; ++attempt) {
        const double rel = 0.1 * std::ldexp(1.0, attempt);
        std::vector<double> left(n), right(n);
        double prev = 0.0;
        bool started = false;
        for (const Event& e : events) {
            double p;
            if (!started) {
                p = first;
                started = true;
            } else {
                p = prev + std::max(1.0, rel * prev);
            }
            if (e.right) p = std::max(p, K * left[e.index]);
            (e.right ? right : left)[e.index] = p;
            prev = p;
        }
        try {
            std::vector<Disk> disks;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = (left[i] + right[i]) / 2;
                const double r = std::max((right[i] - left[i]) / std::numbers::sqrt2, t);
                disks.emplace_back(i, Point(t, t), r);
            }
            DiskInstance inst(InstanceKind::general, std::move(disks));
            if (!validate_delta(inst) || build_intersection_graph(inst) != want) continue;
            return DeltaRepresentation(inst);
        } catch (const InputError&) {
            continue;  // overflow to infinity
        }
    }
    throw EmbeddingError("interval set could not be embedded as delta disks in floating point");
}

GadgetSpec parse_gadget(const std::string& name, std::size_t param) {
    GadgetSpec spec;
    spec.param = param;
    if (name == "ladder") spec.kind = GadgetKind::ladder;
    else if (name == "forbidding") spec.kind = GadgetKind::forbidding;
    else if (name == "clause") spec.kind = GadgetKind::clause;
    else if (name == "matched_cliques" || name == "matched-cliques") spec.kind = GadgetKind::matched_cliques;
    else if (name == "k444") spec.kind = GadgetKind::k444;
    else if (name == "c5") spec.kind = GadgetKind::c5;
    else if (name == "c4") spec.kind = GadgetKind::c4;
    else throw InputError("unknown gadget '" + name + "'");
    return spec;
}

namespace {

void ladder_edges(std::size_t k, std::size_t base, std::vector<Edge>& edges) {
    for (std::size_t i = 0; i < k; ++i) {
        edges.emplace_back(base + 2 * i, base + 2 * i + 1);
        if (i + 1 < k) {
            edges.emplace_back(base + 2 * i, base + 2 * i + 2);
            edges.emplace_back(base + 2 * i + 1, base + 2 * i + 3);
        }
    }
}

std::vector<Edge> forbidding_edges(std::size_t k) {
    std::vector<Edge> edges;
    ladder_edges(k, 0, edges);
    edges.emplace_back(2 * (k - 1) + 1, 2 * (k - 25) + 1);
    return edges;
}

std::vector<Edge> cycle_edges(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return edges;
}

}  // namespace

Graph gen_gadget(const GadgetSpec& spec) {
    std::vector<Edge> edges;
    switch (spec.kind) {
    case GadgetKind::ladder:
        if (spec.param < 1) throw InputError("ladder needs at least one rung");
        ladder_edges(spec.param, 0, edges);
        return Graph::from_edges(2 * spec.param, edges);
    case GadgetKind::forbidding:
        if (spec.param < 25) throw InputError("forbidding gadget needs k >= 25");
        edges = forbidding_edges(spec.param);
        return Graph::from_edges(2 * spec.param, edges);
    case GadgetKind::clause: {
        edges = cycle_edges(5);
        const std::vector<Edge> f = forbidding_edges(27);
        std::size_t next = 5;
        // Ports a_0 = id 0 and b_0 = id 1 of each copy are glued onto the cycle.
        for (auto [pa, pb] : {std::pair<Vertex, Vertex>{3, 4}, {4, 0}}) {
            std::vector<Vertex> map(54);
            map[0] = pa;
            map[1] = pb;
            for (std::size_t v = 2; v < 54; ++v) map[v] = next++;
            for (auto [u, v] : f) edges.emplace_back(map[u], map[v]);
        }
        return Graph::from_edges(next, edges);
    }
    case GadgetKind::matched_cliques: {
        const std::size_t n = spec.param;
        if (n < 3) throw InputError("matched cliques need n >= 3");
        for (std::size_t i = 0; i < n; ++i) {
            edges.emplace_back(i, n + i);
            for (std::size_t j = i + 1; j < n; ++j) {
                edges.emplace_back(i, j);
                edges.emplace_back(n + i, n + j);
            }
        }
        return Graph::from_edges(2 * n, edges);
    }
    case GadgetKind::k444:
        for (std::size_t u = 0; u < 12; ++u)
            for (std::size_t v = u + 1; v < 12; ++v)
                if (u / 4 != v / 4) edges.emplace_back(u, v);
        return Graph::from_edges(12, edges);
    case GadgetKind::c5:
        edges = cycle_edges(5);
        return Graph::from_edges(5, edges);
    case GadgetKind::c4:
        edges = cycle_edges(4);
        return Graph::from_edges(4, edges);
    }
    throw InputError("unknown gadget");
}

DiskInstance gen_random_unit(std::size_t n, double width, std::uint64_t seed) {
    if (!(width > 0.0)) throw InputError("box width must be positive");
    Rng rng(seed);
    std::vector<Disk> disks;
    for (std::size_t i = 0; i < n; ++i) disks.emplace_back(i, stable_point(rng, width), unit_radius);
    return DiskInstance(InstanceKind::unit, std::move(disks));
}

DiskInstance gen_random_delta(std::size_t n, double d_min, double d_max, std::uint64_t seed) {
    if (!(d_min > 0.0) || !(d_min <= d_max)) throw InputError("need 0 < d_min <= d_max");
    Rng rng(seed);
    std::vector<Disk> disks;
    while (disks.size() < n) {
        const double d = rng.log_uniform(d_min, d_max);
        const double theta = rng.uniform(0.0, std::numbers::pi / 2);
        const double x = d * std::cos(theta);
        const double y = d * std::sin(theta);
        const double lo = std::max(x, y);
        const double hi = d * (1.0 - 1e-6);
        if (!(x > 0.0) || !(y > 0.0) || lo > hi) continue;
        Disk disk(disks.size(), Point(x, y), rng.uniform(lo, hi));
        if (is_delta_disk(disk)) disks.push_back(disk);
    }
    return DiskInstance(InstanceKind::delta, std::move(disks));
}

DiskInstance gen_random_disks(std::size_t n, double rmin, double rmax, double width,
                              std::uint64_t seed) {
    if (!(rmin > 0.0) || !(rmin <= rmax)) throw InputError("need 0 < rmin <= rmax");
    if (!(width > 0.0)) throw InputError("box width must be positive");
    const bool unit = rmin == unit_radius && rmax == unit_radius;
    Rng rng(seed);
    std::vector<Disk> disks;
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = stable_point(rng, width);
        disks.emplace_back(i, p, rng.log_uniform(rmin, rmax));
    }
    return DiskInstance(unit ? InstanceKind::unit : InstanceKind::general, std::move(disks));
}

}  // namespace subcolor
