#include "subcolor/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "subcolor/error.h"

namespace subcolor {

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw Error("number formatting failed");
    return std::string(buf, end);
}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

/// Non-empty, non-comment lines split on blanks; '\r' is treated as blank.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) l.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!l.tokens.empty() && l.tokens[0][0] != '#') out.push_back(std::move(l));
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

double to_double(std::string_view s, std::size_t line) {
    double v = 0.0;
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        fail(line, "bad number '" + std::string(s) + "'");
    if (!std::isfinite(v)) fail(line, "non-finite number '" + std::string(s) + "'");
    return v;
}

std::size_t to_index(std::string_view s, std::size_t line) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        fail(line, "bad non-negative integer '" + std::string(s) + "'");
    return static_cast<std::size_t>(v);
}

void expect_arity(const Line& l, std::size_t n) {
    if (l.tokens.size() != n)
        fail(l.number, "expected " + std::to_string(n) + " fields, found " +
                           std::to_string(l.tokens.size()));
}

}  // namespace

DiskInstance parse_instance(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw InputError("line 1: instance must start with 'kind <general|unit|delta>'");
    if (lines[0].tokens[0] != "kind") fail(lines[0].number, "instance must start with 'kind <general|unit|delta>'");
    expect_arity(lines[0], 2);
    InstanceKind kind;
    try {
        kind = parse_kind(std::string(lines[0].tokens[1]));
    } catch (const InputError& e) {
        fail(lines[0].number, e.what());
    }
    std::vector<Disk> disks;
    std::set<Vertex> ids;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "disk") fail(l.number, "unknown record '" + std::string(l.tokens[0]) + "'");
        expect_arity(l, 5);
        const Vertex id = to_index(l.tokens[1], l.number);
        if (!ids.insert(id).second) fail(l.number, "duplicate id " + std::to_string(id));
        const double x = to_double(l.tokens[2], l.number);
        const double y = to_double(l.tokens[3], l.number);
        const double r = to_double(l.tokens[4], l.number);
        try {
            disks.emplace_back(id, Point(x, y), r);
            // Run the kind check per disk so the error carries a line number.
            static_cast<void>(DiskInstance(kind, {disks.back()}));
        } catch (const InputError& e) {
            fail(l.number, e.what());
        }
    }
    return DiskInstance(kind, std::move(disks));
}

std::string serialize_instance(const DiskInstance& instance) {
    std::string out = std::string("kind ") + to_string(instance.kind()) + "\n";
    for (const Disk& d : instance.disks())
        out += "disk " + std::to_string(d.id) + " " + format_number(d.center.x) + " " +
               format_number(d.center.y) + " " + format_number(d.radius) + "\n";
    return out;
}

std::string serialize_coloring(const Coloring& coloring) {
    const Coloring c = coloring.canonical();
    std::string out;
    for (std::size_t v = 0; v < c.size(); ++v)
        out += std::to_string(v) + " " + std::to_string(c[v]) + "\n";
    return out;
}

Coloring parse_coloring(std::string_view text, std::size_t n) {
    std::vector<Color> colors(n, 0);
    std::vector<char> seen(n, 0);
    for (const Line& l : tokenize(text)) {
        expect_arity(l, 2);
        const Vertex v = to_index(l.tokens[0], l.number);
        if (v >= n) fail(l.number, "vertex " + std::to_string(v) + " out of range");
        if (seen[v]) fail(l.number, "vertex " + std::to_string(v) + " colored twice");
        seen[v] = 1;
        colors[v] = to_index(l.tokens[1], l.number);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) throw InputError("coloring misses vertex " + std::to_string(v));
    return Coloring(std::move(colors));
}

std::string serialize_graph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw InputError("line 1: graph must start with 'graph <n>'");
    if (lines[0].tokens[0] != "graph") fail(lines[0].number, "graph must start with 'graph <n>'");
    expect_arity(lines[0], 2);
    const std::size_t n = to_index(lines[0].tokens[1], lines[0].number);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "edge") fail(l.number, "unknown record '" + std::string(l.tokens[0]) + "'");
        expect_arity(l, 3);
        const Vertex u = to_index(l.tokens[1], l.number);
        const Vertex v = to_index(l.tokens[2], l.number);
        if (u >= n || v >= n || u == v) fail(l.number, "bad edge");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

std::string render_svg(const DiskInstance& instance, const std::optional<Coloring>& coloring,
                       const SvgOptions& options) {
    static const char* const palette[7] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                           "#911eb4", "#42d4f4", "#bfef45"};
    if (coloring && coloring->size() != instance.size())
        throw InputError("coloring size does not match the instance");
    if (coloring && !instance.has_dense_ids()) throw InputError("coloring needs disk ids 0..n-1");

    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    if (!instance.empty()) {
        x0 = y0 = INFINITY;
        x1 = y1 = -INFINITY;
        for (const Disk& d : instance.disks()) {
            x0 = std::min(x0, d.center.x - d.radius);
            x1 = std::max(x1, d.center.x + d.radius);
            y0 = std::min(y0, d.center.y - d.radius);
            y1 = std::max(y1, d.center.y + d.radius);
        }
        const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
        x0 -= pad;
        x1 += pad;
        y0 -= pad;
        y1 += pad;
    }
    const double stroke = 0.002 * std::max(x1 - x0, y1 - y0);
    auto f = format_number;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
       << "viewBox=\"" << f(x0) << ' ' << f(y0) << ' ' << f(x1 - x0) << ' ' << f(y1 - y0)
       << "\" preserveAspectRatio=\"xMidYMid meet\">\n"
       << "<g transform=\"translate(0 " << f(y0 + y1) << ") scale(1 -1)\" stroke=\"#222222\" "
       << "stroke-width=\"" << f(stroke) << "\">\n";
    for (const Disk& d : instance.disks()) {
        const char* fill = coloring ? palette[(*coloring)[d.id] % 7] : "#cccccc";
        os << "<circle id=\"d" << d.id << "\" cx=\"" << f(d.center.x) << "\" cy=\"" << f(d.center.y)
           << "\" r=\"" << f(d.radius) << "\" fill=\"" << fill << "\" fill-opacity=\"0.5\"/>\n";
    }
    auto hline = [&](double y, const char* color) {
        os << "<line x1=\"" << f(x0) << "\" y1=\"" << f(y) << "\" x2=\"" << f(x1) << "\" y2=\""
           << f(y) << "\" stroke=\"" << color << "\"/>\n";
    };
    auto vline = [&](double x, const char* color) {
        os << "<line x1=\"" << f(x) << "\" y1=\"" << f(y0) << "\" x2=\"" << f(x) << "\" y2=\""
           << f(y1) << "\" stroke=\"" << color << "\"/>\n";
    };
    if (options.axes) {
        hline(0.0, "#000000");
        vline(0.0, "#000000");
    }
    for (double y : options.horizontal_lines) hline(y, "#888888");
    for (double x : options.vertical_lines) vline(x, "#888888");
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string RunReport::to_text() const {
    std::string out;
    out += "algorithm " + algorithm + "\n";
    out += "n " + std::to_string(n) + "\n";
    out += "m " + std::to_string(m) + "\n";
    out += std::string("kind ") + to_string(kind) + "\n";
    out += "colors " + std::to_string(colors) + "\n";
    if (lower_bound) out += "lower_bound " + std::to_string(*lower_bound) + "\n";
    if (wall_seconds) out += "wall_seconds " + format_number(*wall_seconds) + "\n";
    out += std::string("verdict ") + (valid ? "valid" : "invalid") + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace subcolor
