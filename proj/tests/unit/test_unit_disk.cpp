#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracle.h"
#include "subcolor/error.h"
#include "subcolor/generators.h"
#include "subcolor/solver.h"
#include "subcolor/unit_disk.h"

using namespace subcolor;

namespace {

const double s3 = std::sqrt(3.0);

/// Nearest centre by scanning a wide block of cells.
HexCell nearest_by_scan(const Point& p) {
    HexCell best;
    double bd = INFINITY;
    const auto ci = static_cast<std::int64_t>(std::floor(p.y / 0.75));
    const auto cj = static_cast<std::int64_t>(std::floor(p.x / (s3 / 2)));
    for (std::int64_t i = ci - 4; i <= ci + 4; ++i)
        for (std::int64_t j = cj - 4; j <= cj + 4; ++j) {
            const double d = squared_distance(p, hex_center({i, j}));
            if (d < bd) {
                bd = d;
                best = {i, j};
            }
        }
    return best;
}

DiskInstance unit(std::vector<Point> centers) {
    std::vector<Disk> d;
    for (std::size_t i = 0; i < centers.size(); ++i) d.emplace_back(i, centers[i], 0.5);
    return DiskInstance(InstanceKind::unit, d);
}

}  // namespace

TEST_CASE("hex_cell_of anchors") {
    CHECK(hex_cell_of(Point(0, 0)) == HexCell{0, 0});
    CHECK(hex_cell_of(Point(s3 / 2, 0)) == HexCell{0, 1});
    CHECK(hex_cell_of(Point(s3 / 4, -0.75)) == HexCell{-1, 0});
    CHECK(hex_center({-1, 0}).x == doctest::Approx(s3 / 4));
}

TEST_CASE("hex_cell_of returns the nearest centre") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int t = 0; t < 5000; ++t) {
        const Point p(u(rng), u(rng));
        const HexCell c = hex_cell_of(p);
        CHECK(squared_distance(p, hex_center(c)) == squared_distance(p, hex_center(nearest_by_scan(p))));
        // Cell diameter is 1: every point is within the circumradius.
        CHECK(squared_distance(p, hex_center(c)) <= 0.25 + 1e-12);
    }
}

TEST_CASE("hex boundary ties go to the smaller cell") {
    // Midpoint between (0,0) and (0,1) is equidistant from both.
    CHECK(hex_cell_of(Point(s3 / 4, 0)) == HexCell{0, 0});
}

TEST_CASE("isbell colors match the reference rows and both recurrences") {
    const int rows[3][3] = {{3, 4, 5}, {0, 1, 2}, {5, 6, 0}};
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 3; ++j) CHECK(isbell_color({1 - r, j}) == rows[r][j]);
    CHECK(isbell_color({0, 0}) == 0);
    CHECK(isbell_color({0, 1}) == 1);
    CHECK(isbell_color({-2, 0}) == 2);

    for (std::int64_t i = -10; i <= 10; ++i)
        for (std::int64_t j = -10; j <= 10; ++j) {
            const int c = isbell_color({i, j});
            CHECK(isbell_color({i, j + 1}) == (c + 1) % 7);
            // Below-left and below-right found geometrically in row i - 1.
            const Point here = hex_center({i, j});
            const HexCell bl = hex_cell_of(Point(here.x - s3 / 4, here.y - 0.75));
            const HexCell br = hex_cell_of(Point(here.x + s3 / 4, here.y - 0.75));
            CHECK(bl.i == i - 1);
            CHECK(isbell_color(bl) == (c + 4) % 7);
            CHECK(isbell_color(br) == (c + 5) % 7);
        }
}

TEST_CASE("same-colored cells in a window are more than 1 apart") {
    std::map<int, std::vector<HexCell>> by_color;
    for (std::int64_t i = 0; i < 12; ++i)
        for (std::int64_t j = 0; j < 12; ++j) by_color[isbell_color({i, j})].push_back({i, j});
    for (const auto& [c, cells] : by_color)
        for (std::size_t a = 0; a < cells.size(); ++a)
            for (std::size_t b = a + 1; b < cells.size(); ++b)
                CHECK(oracle::hexagon_distance(cells[a], cells[b]) > 1.0);
}

TEST_CASE("color_unit_7 basics") {
    CHECK(color_unit_7(unit({Point(3, 3)})).num_colors() <= 7);
    Coloring same = color_unit_7(unit({Point(0.1, 0.1), Point(-0.1, 0.05)}));
    CHECK(same[0] == same[1]);
    CHECK_THROWS_AS(color_unit_7(DiskInstance(InstanceKind::general, {Disk(0, Point(0, 0), 0.5)})),
                    InputError);

    DiskInstance inst = gen_random_unit(500, 20, 9);
    Coloring c = color_unit_7(inst);
    CHECK(c.num_colors() <= 7);
    CHECK(validate_subcoloring(build_intersection_graph(inst), c));
}

TEST_CASE("region_of examples and negative coordinates") {
    CHECK(region_of(Point(1.5, 0.5)) == Region::R0);
    CHECK(region_of(Point(0.5, 0.5)) == Region::R2);
    CHECK(region_of(Point(1.5, 1.5)) == Region::R1);
    CHECK(region_of(Point(-0.5, 0.5)) == Region::R0);   // floor -1 = 3 mod 4
    CHECK(region_of(Point(-1.5, -0.5)) == Region::R2);  // floor x = -2 = 2 mod 4, odd row
    CHECK(region_of(Point(4.5, 2.5)) == Region::R2);
}

TEST_CASE("region rectangles of one class are at distance at least 1") {
    // Unit squares of the same class: any two in different maximal rectangles
    // are separated by a gap of at least 1.
    auto cls = [](long x, long y) { return region_of(Point(x + 0.5, y + 0.5)); };
    for (long y = -4; y < 4; ++y)
        for (long x = -8; x < 8; ++x)
            for (long y2 = y; y2 <= y + 1; ++y2)
                for (long x2 = x - 1; x2 <= x + 1; ++x2) {
                    if (x2 == x && y2 == y) continue;
                    if (cls(x, y) != cls(x2, y2)) continue;
                    // Touching squares of one class must lie in the same row.
                    CHECK(y2 == y);
                }
    // Sampled disks in distinct rectangles of the same class never meet.
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-8, 8);
    auto rect = [](const Point& p) {
        const long fy = static_cast<long>(std::floor(p.y));
        long fx = static_cast<long>(std::floor(p.x));
        while (region_of(Point(fx - 1 + 0.5, fy + 0.5)) == region_of(p)) --fx;
        return std::pair<long, long>{fx, fy};
    };
    for (int t = 0; t < 20000; ++t) {
        Point a(u(rng), u(rng));
        Point b(a.x + u(rng) / 8, a.y + u(rng) / 8);
        if (region_of(a) != region_of(b) || rect(a) == rect(b)) continue;
        CHECK(squared_distance(a, b) > 1.0);
    }
}

TEST_CASE("approx3_unit stages") {
    auto k3 = approx3_unit(unit({Point(0, 0), Point(0.3, 0), Point(0.1, 0.2)}));
    CHECK(k3.coloring.num_colors() == 1);
    CHECK(k3.lower_bound == 1);

    // C5 as unit disks: a regular pentagon with side 0.95.
    std::vector<Point> pent;
    const double R = 0.95 / (2 * std::sin(M_PI / 5));
    for (int i = 0; i < 5; ++i) pent.emplace_back(5.3 + R * std::cos(2 * M_PI * i / 5), 5.3 + R * std::sin(2 * M_PI * i / 5));
    DiskInstance c5 = unit(pent);
    REQUIRE(build_intersection_graph(c5) == gen_gadget({GadgetKind::c5, 0}));
    auto r = approx3_unit(c5);
    CHECK(r.lower_bound == 2);
    CHECK(r.palette == 6);
    CHECK(r.coloring.num_colors() <= 6);
    CHECK(validate_subcoloring(build_intersection_graph(c5), r.coloring));

    auto e = approx3_unit(DiskInstance(InstanceKind::unit, {}));
    CHECK(e.coloring.num_colors() == 0);
    CHECK(e.lower_bound == 1);
}

TEST_CASE("approx3_unit falls back to Isbell when a region piece needs 3 colors") {
    // Dense points inside one R0 rectangle [1,4) x [0,1).
    int fallbacks = 0;
    for (std::uint64_t seed = 1; seed <= 60 && fallbacks == 0; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> ux(1.05, 3.95), uy(0.05, 0.95);
        std::vector<Point> pts;
        for (int i = 0; i < 40; ++i) pts.emplace_back(ux(rng), uy(rng));
        DiskInstance inst = unit(pts);
        const Graph g = build_intersection_graph(inst);
        auto r = approx3_unit(inst);
        CHECK(validate_subcoloring(g, r.coloring));
        if (r.lower_bound == 3) {
            ++fallbacks;
            CHECK(r.palette == 7);
            CHECK(r.coloring == color_unit_7(inst));
            SolverOptions o;
            o.size_limit = 100;
            CHECK_FALSE(decide_k_subcoloring(g, 2, {}, o));
        }
    }
    CHECK(fallbacks == 1);
}

TEST_CASE("approx3_unit contract on random instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        DiskInstance inst = gen_random_unit(200, 6, seed);
        auto r = approx3_unit(inst);
        const Graph g = build_intersection_graph(inst);
        CHECK(validate_subcoloring(g, r.coloring));
        CHECK(r.coloring.num_colors() <= 3 * r.lower_bound + 1);
        CHECK(r.coloring.num_colors() <= r.palette);
    }
}

TEST_CASE("region components fit in a 3 x 1 rectangle and have small independence number") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        DiskInstance inst = gen_random_unit(120, 8, seed);
        const Graph g = build_intersection_graph(inst);
        for (int r = 0; r < 3; ++r) {
            std::vector<Vertex> members;
            for (const Disk& d : inst.disks())
                if (static_cast<int>(region_of(d.center)) == r) members.push_back(d.id);
            const Graph h = g.induced(members);
            for (const auto& comp : connected_components(h)) {
                double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
                for (Vertex v : comp) {
                    const Point& p = inst.disk(members[v]).center;
                    x0 = std::min(x0, std::floor(p.x));
                    x1 = std::max(x1, std::floor(p.x) + 1);
                    y0 = std::min(y0, std::floor(p.y));
                    y1 = std::max(y1, std::floor(p.y) + 1);
                }
                CHECK(x1 - x0 <= 3);
                CHECK(y1 - y0 <= 1);
                if (comp.size() <= 40) CHECK(oracle::mis_size(h.induced(comp)) <= 12);
            }
        }
    }
}

TEST_CASE("approx3_unit is within 3x of optimal on small instances") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const std::size_t n = 1 + oracle::mix(seed) % 12;
        DiskInstance inst = gen_random_unit(n, 1.0 + static_cast<double>(oracle::mix(seed + 99) % 30) / 10, seed);
        const Graph g = build_intersection_graph(inst);
        const std::size_t opt = exact_subchromatic(g).k;
        auto r = approx3_unit(inst);
        CHECK(r.coloring.num_colors() <= 3 * opt);
        CHECK(r.lower_bound <= opt);
    }
}
