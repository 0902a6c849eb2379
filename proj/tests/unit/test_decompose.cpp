#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracle.h"
#include "subcolor/decompose.h"
#include "subcolor/error.h"
#include "subcolor/generators.h"
#include "subcolor/solver.h"

using namespace subcolor;

namespace {

DiskInstance inst(std::vector<std::array<double, 3>> d, InstanceKind kind = InstanceKind::general) {
    std::vector<Disk> disks;
    for (std::size_t i = 0; i < d.size(); ++i) disks.emplace_back(i, Point(d[i][0], d[i][1]), d[i][2]);
    return DiskInstance(kind, disks);
}

std::vector<Vertex> all_of(const DiskInstance& x) {
    std::vector<Vertex> v(x.size());
    for (Vertex i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

}  // namespace

TEST_CASE("horizontal_median_separator examples") {
    auto one = inst({{3, 4, 1}});
    auto s1 = horizontal_median_separator(one, {0});
    CHECK(s1.S == std::vector<Vertex>{0});
    CHECK(s1.A.empty());
    CHECK(s1.B.empty());

    auto stack = inst({{0, 0, 0.5}, {0, 10, 0.5}, {0, 20, 0.5}}, InstanceKind::unit);
    auto s2 = horizontal_median_separator(stack, all_of(stack));
    CHECK(s2.y_median == 10);
    CHECK(s2.S == std::vector<Vertex>{1});
    CHECK(s2.A == std::vector<Vertex>{0});
    CHECK(s2.B == std::vector<Vertex>{2});

    auto band = inst({{0, 0, 2}, {5, 1, 1.5}, {9, -1, 1}});
    CHECK(horizontal_median_separator(band, all_of(band)).S.size() == 3);

    // Tangent to the median line counts as crossing.
    auto tangent = inst({{0, 0, 1}, {5, 1, 1}, {9, 2, 1}});
    CHECK(horizontal_median_separator(tangent, all_of(tangent)).S.size() == 3);
    CHECK_THROWS_AS(horizontal_median_separator(one, {}), InputError);
}

TEST_CASE("transform_to_delta examples") {
    CHECK(transform_to_delta(Disk(0, Point(1, 1), 1.2), Point(0, 0), 1) == Disk(0, Point(1, 1), 1.2));
    CHECK(transform_to_delta(Disk(0, Point(4, 4), 1.2), Point(5, 5), 3) == Disk(0, Point(1, 1), 1.2));
    CHECK(transform_to_delta(Disk(0, Point(-1, 2), 2.2), Point(0, 0), 2) == Disk(0, Point(1, 2), 2.2));
    CHECK(transform_to_delta(Disk(0, Point(3, -1), 3.1), Point(0, 0), 4) == Disk(0, Point(3, 1), 3.1));
    CHECK_THROWS_AS(transform_to_delta(Disk(0, Point(1, 1), 1.2), Point(0, 0), 3), InputError);
    CHECK_THROWS_AS(transform_to_delta(Disk(0, Point(1, 1), 2.0), Point(0, 0), 1), InputError);
}

TEST_CASE("vertical_split_linear examples") {
    auto through = inst({{1, 0, 1.5}, {-1, 0.5, 2}, {0, -1, 1}});
    auto a = vertical_split_linear(through, all_of(through), 0.0);
    CHECK(a.V5.size() == 3);
    for (const auto& q : a.quadrant) CHECK(q.members.empty());

    // Centre on the vertical line while crossing the horizontal one: contains P.
    auto on_line = inst({{0, 0.5, 1}, {-3, 0, 0.5}, {3, 0, 0.5}});
    auto b = vertical_split_linear(on_line, all_of(on_line), 0.0);
    CHECK(b.x_median == 0);
    CHECK(b.V5 == std::vector<Vertex>{0});
    CHECK(b.left == std::vector<Vertex>{1});
    CHECK(b.right == std::vector<Vertex>{2});

    // Two disks in opposite quadrants, both missing P, plus the median disk.
    auto opposite = inst({{1, 1, 1.2}, {-1.5, -1, 1.6}, {0, 0.1, 0.5}});
    auto c = vertical_split_linear(opposite, all_of(opposite), 0.0);
    CHECK(c.quadrant[0].members == std::vector<Vertex>{0});
    CHECK(c.quadrant[2].members == std::vector<Vertex>{1});
    CHECK(validate_delta(c.quadrant[0].rep.instance()));
    CHECK(validate_delta(c.quadrant[2].rep.instance()));
    CHECK(c.V5 == std::vector<Vertex>{2});

    auto off = inst({{0, 5, 1}});
    CHECK_THROWS_AS(vertical_split_linear(off, {0}, 0.0), InputError);
}

TEST_CASE("decomposition invariants on random instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const std::size_t n = 1 + oracle::mix(seed) % 300;
        DiskInstance x = gen_random_disks(n, 0.05, 3.0, 30.0, seed);
        const Graph g = oracle::intersection_graph(x.disks());
        const DecompositionTree tree = decompose(x);
        CHECK(verify_tree(x, g, tree).empty());

        std::vector<int> seen(n, 0);
        for (const auto& node : tree.disk) {
            const std::size_t m = node.members.size();
            CHECK_FALSE(node.split.S.empty());
            CHECK(node.split.A.size() <= (m + 1) / 2);
            CHECK(node.split.B.size() <= (m + 1) / 2);
            for (Vertex a : node.split.A)
                for (Vertex b : node.split.B) CHECK_FALSE(g.adjacent(a, b));
        }
        for (const auto& node : tree.linear) {
            for (Vertex a : node.split.left)
                for (Vertex b : node.split.right) CHECK_FALSE(g.adjacent(a, b));
            for (const auto& piece : node.split.quadrant) {
                CHECK(oracle::intersection_graph(piece.rep.instance().disks()) == g.induced(piece.members));
                for (Vertex v : piece.members) ++seen[v];
            }
            for (Vertex u : node.split.V5) {
                ++seen[u];
                for (Vertex v : node.split.V5)
                    if (u != v) CHECK(g.adjacent(u, v));
            }
        }
        // Every vertex lands in exactly one piece or clique bucket.
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
}

TEST_CASE("verify_tree reports a tampered tree") {
    DiskInstance x = gen_random_disks(60, 0.1, 2.0, 20.0, 3);
    const Graph g = build_intersection_graph(x);
    DecompositionTree tree = decompose(x);
    REQUIRE(tree.disk.size() > 1);
    auto& node = tree.disk[0];
    if (!node.split.A.empty()) {
        node.split.B.push_back(node.split.A.back());
        node.split.A.pop_back();
    } else {
        node.split.A.push_back(node.split.S.back());
        node.split.S.pop_back();
    }
    CHECK_FALSE(verify_tree(x, g, tree).empty());
}

TEST_CASE("describe_tree is deterministic text") {
    DiskInstance x = gen_random_disks(40, 0.1, 2.0, 10.0, 8);
    const std::string a = describe_tree(decompose(x));
    CHECK(a == describe_tree(decompose(x)));
    CHECK(a.rfind("disk 0 depth 0", 0) == 0);
}

TEST_CASE("color_disk_log3") {
    CHECK(color_disk_log3(inst({{2, 3, 1}})).num_colors() == 1);
    auto concentric = inst({{0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 0.5}});
    CHECK(color_disk_log3(concentric).num_colors() == 1);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        DiskInstance x = gen_random_disks(300, 0.05, 2.0, 25.0, seed);
        Coloring c = color_disk_log3(x);
        const std::size_t L = ceil_log2(300);
        CHECK(validate_subcoloring(build_intersection_graph(x), c));
        CHECK(c.num_colors() <= (L + 1) * (L + 1) * (4 * (2 * L + 1) + 1));
    }
    CHECK(color_disk_log3(DiskInstance()).num_colors() == 0);
}

TEST_CASE("color_disk_approx") {
    auto clique = inst({{0, 0, 1}, {0.5, 0.2, 1}, {0.1, 0.4, 1}});
    auto a = color_disk_approx(clique);
    CHECK(a.coloring.num_colors() == 1);
    CHECK(a.lower_bound == 1);

    auto e = color_disk_approx(DiskInstance());
    CHECK(e.lower_bound == 0);
    CHECK(e.groups == 0);

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t n = 1 + oracle::mix(seed) % 12;
        DiskInstance x = gen_random_disks(n, 0.2, 2.0, 6.0, seed);
        const Graph g = build_intersection_graph(x);
        auto r = color_disk_approx(x);
        const std::size_t opt = exact_subchromatic(g).k;
        const std::size_t L = ceil_log2(n);
        CHECK(validate_subcoloring(g, r.coloring));
        CHECK(r.lower_bound <= opt);
        CHECK(r.groups <= 5 * (L + 1) * (L + 1));
        CHECK(r.coloring.num_colors() <= r.groups * 54 * opt);
    }
}

TEST_CASE("two disjoint BC(3) interval instances") {
    std::vector<std::pair<double, double>> bc3 = {{0, 1}, {2, 3}, {0.5, 2.5}, {4, 5}, {6, 7}, {4.5, 6.5}, {0.7, 6.3}};
    auto rep = gen_interval_to_delta(IntervalSet(bc3));

    SUBCASE("shifted side by side, the median lines cut each copy") {
        std::vector<Disk> disks;
        double shift = 0;
        for (const Disk& d : rep.instance().disks()) {
            disks.push_back(d);
            shift = std::max(shift, 3 * (d.center.x + d.radius));
        }
        for (const Disk& d : rep.instance().disks())
            disks.emplace_back(d.id + 7, Point(d.center.x + shift, d.center.y), d.radius);
        DiskInstance x(InstanceKind::general, disks);
        auto r = color_disk_approx(x);
        CHECK(validate_subcoloring(build_intersection_graph(x), r.coloring));
        CHECK(r.lower_bound >= 1);
        CHECK(r.lower_bound <= 3);
    }

    SUBCASE("mirrored through a point disk, each copy is one whole piece") {
        std::vector<Disk> disks;
        for (const Disk& d : rep.instance().disks()) {
            disks.push_back(d);
            disks.emplace_back(d.id + 7, Point(-d.center.x, -d.center.y), d.radius);
        }
        disks.emplace_back(14, Point(0, 0), 1e-3);
        DiskInstance x(InstanceKind::general, disks);
        const Graph g = build_intersection_graph(x);
        REQUIRE(connected_components(g).size() == 3);
        const std::vector<Vertex> copy1 = {0, 1, 2, 3, 4, 5, 6};
        REQUIRE(oracle::chi_s(g.induced(copy1)) == 3);
        auto r = color_disk_approx(x);
        CHECK(validate_subcoloring(g, r.coloring));
        CHECK(r.lower_bound == 3);
    }
}
