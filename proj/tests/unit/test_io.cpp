#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "oracle.h"
#include "subcolor/error.h"
#include "subcolor/generators.h"
#include "subcolor/io.h"

using namespace subcolor;

namespace {

std::string parse_error(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("format_number round trips") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-2.25) == "-2.25");
    for (std::uint64_t s = 1; s <= 1000; ++s) {
        double v = std::ldexp(static_cast<double>(oracle::mix(s) >> 11), -40) - 4096.0;
        CHECK(std::stod(format_number(v)) == v);
    }
    CHECK(std::stod(format_number(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("parse_instance examples") {
    auto one = parse_instance("kind general\ndisk 0 1.0 1.0 1.2\n");
    REQUIRE(one.size() == 1);
    CHECK(one.disks()[0] == Disk(0, Point(1, 1), 1.2));

    auto empty = parse_instance("kind unit\n");
    CHECK(empty.empty());
    CHECK(empty.kind() == InstanceKind::unit);

    auto commented = parse_instance("# header\n\nkind delta\n# a disk\ndisk 3 1 1 1.2\n");
    CHECK(commented.kind() == InstanceKind::delta);
    CHECK(commented.disks()[0].id == 3);
}

TEST_CASE("parse_instance errors carry line numbers") {
    CHECK(parse_error("kind unit\ndisk 0 0 0 0.5\ndisk 1 0 0 0.7\n").rfind("line 3:", 0) == 0);
    CHECK(parse_error("kind general\ndisk 0 0 0\n").rfind("line 2:", 0) == 0);
    CHECK(parse_error("kind general\ndisk 0 0 0 1\ndisk 0 1 1 1\n").rfind("line 3:", 0) == 0);
    CHECK(parse_error("kind general\n\ndisk 0 nan 0 1\n").rfind("line 3:", 0) == 0);
    CHECK(parse_error("kind general\ndisk 0 inf 0 1\n").rfind("line 2:", 0) == 0);
    CHECK(parse_error("kind general\ndisk 0 0 0 -1\n").rfind("line 2:", 0) == 0);
    CHECK(parse_error("kind general\ndisk 0 0x1 0 1\n").rfind("line 2:", 0) == 0);
    CHECK(parse_error("kind delta\ndisk 0 1 1 1.5\n").rfind("line 2:", 0) == 0);
    CHECK(parse_error("kind square\n").rfind("line 1:", 0) == 0);
    CHECK(parse_error("# c\ndisk 0 0 0 1\n").rfind("line 2:", 0) == 0);
    CHECK(parse_error("kind general\ncircle 0 0 0 1\n").rfind("line 2:", 0) == 0);
    CHECK_FALSE(parse_error("").empty());
}

TEST_CASE("instance round trip is bit exact") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (const DiskInstance& x : {gen_random_disks(50, 1e-3, 7.5, 33.3, seed), gen_random_unit(50, 9, seed),
                                      gen_random_delta(50, 1e-4, 1e7, seed)}) {
            const std::string text = serialize_instance(x);
            const DiskInstance y = parse_instance(text);
            REQUIRE(y.size() == x.size());
            CHECK(y.kind() == x.kind());
            for (std::size_t i = 0; i < x.size(); ++i) {
                CHECK(y.disks()[i] == x.disks()[i]);
                CHECK(std::signbit(y.disks()[i].center.x) == std::signbit(x.disks()[i].center.x));
            }
            CHECK(serialize_instance(y) == text);
        }
    }
    CHECK(serialize_instance(DiskInstance()) == "kind general\n");
}

TEST_CASE("coloring serialization") {
    CHECK(serialize_coloring(Coloring({0, 0, 1})) == "0 0\n1 0\n2 1\n");
    CHECK(serialize_coloring(Coloring({5, 9, 5})) == "0 0\n1 1\n2 0\n");
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const std::size_t n = oracle::mix(seed) % 40;
        std::vector<Color> c(n);
        for (std::size_t v = 0; v < n; ++v) c[v] = oracle::mix(seed * 100 + v) % 6;
        const Coloring col(c);
        const Coloring back = parse_coloring(serialize_coloring(col), n);
        CHECK(back == col.canonical());
        CHECK(serialize_coloring(back) == serialize_coloring(col));
    }
    CHECK_THROWS_AS(parse_coloring("0 0\n2 1\n", 3), InputError);
    CHECK_THROWS_AS(parse_coloring("0 0\n0 1\n1 0\n", 2), InputError);
    CHECK_THROWS_AS(parse_coloring("0 0\n5 1\n", 2), InputError);
    CHECK_THROWS_AS(parse_coloring("0\n", 1), InputError);
    CHECK(parse_coloring("# none\n", 0).size() == 0);
}

TEST_CASE("graph serialization") {
    const Graph g = gen_gadget({GadgetKind::clause, 0});
    CHECK(parse_graph(serialize_graph(g)) == g);
    CHECK(parse_graph("graph 0\n").size() == 0);
    CHECK_THROWS_AS(parse_graph("graph 2\nedge 0 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("graph 2\nedge 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("kind unit\n"), InputError);
}

TEST_CASE("render_svg") {
    const std::string empty = render_svg(DiskInstance(), std::nullopt);
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("</svg>") != std::string::npos);
    CHECK(count(empty, "<circle") == 0);

    DiskInstance one(InstanceKind::general, {Disk(0, Point(1, 2), 3)});
    const std::string neutral = render_svg(one, std::nullopt);
    CHECK(count(neutral, "<circle") == 1);
    CHECK(count(neutral, "fill=\"#cccccc\"") == 1);
    CHECK(neutral.find("cx=\"1\" cy=\"2\" r=\"3\"") != std::string::npos);

    DiskInstance k3(InstanceKind::unit, {Disk(0, Point(0, 0), 0.5), Disk(1, Point(0.3, 0), 0.5),
                                         Disk(2, Point(0, 0.3), 0.5)});
    const std::string same = render_svg(k3, Coloring({0, 0, 0}));
    CHECK(count(same, "<circle") == 3);
    CHECK(count(same, "fill=\"#e6194b\"") == 3);
    // Colour classes cycle through seven fills.
    CHECK(count(render_svg(k3, Coloring({0, 7, 14})), "fill=\"#e6194b\"") == 3);

    SvgOptions opt;
    opt.axes = true;
    opt.horizontal_lines = {0.25};
    CHECK(count(render_svg(k3, std::nullopt, opt), "<line") == 3);
    CHECK(render_svg(k3, Coloring({0, 1, 2})) == render_svg(k3, Coloring({0, 1, 2})));
    CHECK_THROWS_AS(render_svg(k3, Coloring({0, 1})), InputError);
}

TEST_CASE("RunReport text") {
    RunReport r;
    r.algorithm = "isbell7";
    r.n = 3;
    r.m = 2;
    r.kind = InstanceKind::unit;
    r.colors = 2;
    r.valid = true;
    CHECK(r.to_text() == "algorithm isbell7\nn 3\nm 2\nkind unit\ncolors 2\nverdict valid\n");
    r.lower_bound = 1;
    r.wall_seconds = 0.5;
    r.valid = false;
    CHECK(r.to_text() ==
          "algorithm isbell7\nn 3\nm 2\nkind unit\ncolors 2\nlower_bound 1\nwall_seconds 0.5\nverdict invalid\n");
}

TEST_CASE("file helpers") {
    const std::string path = "test_io_roundtrip.txt";
    write_file(path, "kind general\r\n");
    CHECK(read_file(path) == "kind general\r\n");
    CHECK(parse_instance(read_file(path)).empty());
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("no/such/file"), InputError);
}
