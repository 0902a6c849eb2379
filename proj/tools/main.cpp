#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "subcolor/decompose.h"
#include "subcolor/delta_disk.h"
#include "subcolor/error.h"
#include "subcolor/generators.h"
#include "subcolor/io.h"
#include "subcolor/solver.h"
#include "subcolor/unit_disk.h"

using namespace subcolor;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_violation = 2;

void emit(const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-")
        std::cout << contents;
    else
        write_file(path, contents);
}

/// Either a disk instance or an abstract graph file.
struct Input {
    std::optional<DiskInstance> instance;
    Graph graph;
};

Input load_input(const std::string& path) {
    const std::string text = read_file(path);
    Input in;
    if (text.find("graph") != std::string::npos && text.find("kind") == std::string::npos) {
        in.graph = parse_graph(text);
    } else {
        in.instance = parse_instance(text);
        in.graph = build_intersection_graph(*in.instance);
    }
    return in;
}

struct GenArgs {
    std::uint64_t seed = 1;
    std::string out;
    std::size_t n = 10;
    std::size_t k = 3;
    double width = 10.0;
    double dmin = 1.0;
    double dmax = 1000.0;
    double rmin = 0.1;
    double rmax = 1.0;
    std::string gadget = "c5";
    std::size_t param = 0;
    std::string intervals;
    std::string graph_out;
};

struct ColorArgs {
    std::string algo;
    std::string in;
    std::string out;
    std::string report;
    bool timing = false;
};

int run_color(const ColorArgs& a) {
    const DiskInstance inst = parse_instance(read_file(a.in));
    const Graph g = build_intersection_graph(inst);
    RunReport report;
    report.algorithm = a.algo;
    report.n = g.size();
    report.m = g.edge_count();
    report.kind = inst.kind();

    const auto start = std::chrono::steady_clock::now();
    Coloring c;
    if (a.algo == "isbell7") {
        c = color_unit_7(inst);
    } else if (a.algo == "unit3approx") {
        UnitApprox r = approx3_unit(inst);
        c = r.coloring;
        report.lower_bound = r.lower_bound;
    } else if (a.algo == "delta-log") {
        c = delta_color_log(DeltaRepresentation(inst));
    } else if (a.algo == "delta-approx") {
        DeltaApprox r = delta_color_approx(DeltaRepresentation(inst));
        c = r.coloring;
        report.lower_bound = r.k;
    } else if (a.algo == "disk-log3") {
        c = color_disk_log3(inst);
    } else if (a.algo == "disk-approx") {
        DiskApprox r = color_disk_approx(inst);
        c = r.coloring;
        report.lower_bound = r.lower_bound;
    } else if (a.algo == "exact") {
        ExactResult r = exact_subchromatic(g);
        c = r.coloring;
        report.lower_bound = r.k;
    } else {
        throw InputError("unknown algorithm '" + a.algo + "'");
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.colors = c.canonical().num_colors();
    report.valid = validate_subcoloring(g, c);
    if (a.timing) report.wall_seconds = seconds;
    std::cerr << "wall_seconds " << format_number(seconds) << '\n';

    if (!a.out.empty()) write_file(a.out, serialize_coloring(c));
    const std::string text = report.to_text();
    if (!a.report.empty()) write_file(a.report, text);
    std::cout << text;
    return report.valid ? exit_ok : exit_violation;
}

int run_verify(const std::string& in_path, const std::string& coloring_path) {
    const Input in = load_input(in_path);
    const Coloring c = parse_coloring(read_file(coloring_path), in.graph.size());
    if (auto p3 = find_monochromatic_p3(in.graph, c)) {
        std::cout << "invalid monochromatic P3 " << p3->a << ' ' << p3->b << ' ' << p3->c
                  << " color " << c[p3->b] << '\n';
        return exit_violation;
    }
    std::cout << "valid colors " << c.distinct_colors() << '\n';
    return exit_ok;
}

int run_oracle(const std::string& in_path, std::size_t limit, const std::string& out) {
    const Input in = load_input(in_path);
    SolverOptions options = SolverOptions::exact();
    options.size_limit = limit;
    const ExactResult r = exact_subchromatic(in.graph, options);
    std::cout << r.k << '\n';
    if (!out.empty()) write_file(out, serialize_coloring(r.coloring));
    return exit_ok;
}

std::string describe_pieces(const DecompositionTree& tree) {
    std::string s;
    for (const LinearNode& node : tree.linear)
        for (std::size_t q = 0; q < 4; ++q) {
            const DeltaPiece& piece = node.split.quadrant[q];
            if (piece.members.empty()) continue;
            s += "piece " + std::to_string(node.disk_depth) + " " + std::to_string(node.linear_depth) +
                 " Q" + std::to_string(q + 1) + " " + std::to_string(piece.members.size()) + "\n";
            for (std::size_t i = 0; i < piece.members.size(); ++i) {
                const Disk& d = piece.rep.disk(i);
                s += "member " + std::to_string(i) + " " + std::to_string(piece.members[i]) + " " +
                     format_number(d.center.x) + " " + format_number(d.center.y) + " " +
                     format_number(d.radius) + "\n";
            }
        }
    return s;
}

int run_decompose(const std::string& in_path, bool delta, const std::string& out) {
    const DiskInstance inst = parse_instance(read_file(in_path));
    const DecompositionTree tree = decompose(inst);
    const auto issues = verify_tree(inst, build_intersection_graph(inst), tree);
    for (const auto& issue : issues) std::cerr << issue << '\n';
    emit(out, delta ? describe_pieces(tree) : describe_tree(tree));
    return issues.empty() ? exit_ok : exit_violation;
}

int run_render(const std::string& in_path, const std::string& coloring_path,
               const std::string& out, bool axes) {
    const DiskInstance inst = parse_instance(read_file(in_path));
    std::optional<Coloring> c;
    if (!coloring_path.empty()) c = parse_coloring(read_file(coloring_path), inst.size());
    SvgOptions options;
    options.axes = axes;
    emit(out, render_svg(inst, c, options));
    return exit_ok;
}

std::vector<std::pair<double, double>> read_intervals(const std::string& path) {
    std::istringstream is(read_file(path));
    std::vector<std::pair<double, double>> out;
    double l = 0, r = 0;
    while (is >> l >> r) out.emplace_back(l, r);
    if (!is.eof()) throw InputError("interval file must hold pairs of numbers");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subcolorings of disk, unit disk and delta-disk graphs"};
    app.require_subcommand(1);

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", g.seed, "Random seed");
        sub->add_option("--out", g.out, "Output file (stdout if omitted)");
    };
    auto* gen_bc_cmd = gen->add_subcommand("bc", "BC(k) disk representation");
    gen_bc_cmd->add_option("--k", g.k, "Recursion depth")->required();
    gen_bc_cmd->add_option("--graph-out", g.graph_out, "Also write the abstract graph");
    add_common(gen_bc_cmd);
    auto* gen_iv = gen->add_subcommand("interval2delta", "Delta representation of an interval graph");
    gen_iv->add_option("--n", g.n, "Random interval count");
    gen_iv->add_option("--intervals", g.intervals, "File of 'left right' pairs instead of random");
    add_common(gen_iv);
    auto* gen_gad = gen->add_subcommand("gadget", "Abstract gadget graph");
    gen_gad->add_option("--name", g.gadget, "ladder|forbidding|clause|matched_cliques|k444|c5|c4")->required();
    gen_gad->add_option("--param", g.param, "Rungs or clique size");
    add_common(gen_gad);
    auto* gen_unit = gen->add_subcommand("random-unit", "Random unit disks");
    gen_unit->add_option("--n", g.n)->required();
    gen_unit->add_option("--width", g.width, "Box side");
    add_common(gen_unit);
    auto* gen_delta = gen->add_subcommand("random-delta", "Random delta disks");
    gen_delta->add_option("--n", g.n)->required();
    gen_delta->add_option("--dmin", g.dmin);
    gen_delta->add_option("--dmax", g.dmax);
    add_common(gen_delta);
    auto* gen_disk = gen->add_subcommand("random-disk", "Random disks");
    gen_disk->add_option("--n", g.n)->required();
    gen_disk->add_option("--rmin", g.rmin);
    gen_disk->add_option("--rmax", g.rmax);
    gen_disk->add_option("--width", g.width, "Box side");
    add_common(gen_disk);

    ColorArgs ca;
    auto* color = app.add_subcommand("color", "Color an instance and validate the result");
    color->add_option("--algo", ca.algo)
        ->required()
        ->check(CLI::IsMember({"isbell7", "unit3approx", "delta-log", "delta-approx", "disk-log3",
                               "disk-approx", "exact"}));
    color->add_option("--in", ca.in)->required();
    color->add_option("--out", ca.out, "Coloring output file");
    color->add_option("--report", ca.report, "Report output file");
    color->add_flag("--timing", ca.timing, "Include wall time in the report file");

    std::string in_path, coloring_path, out_path;
    auto* verify = app.add_subcommand("verify", "Check a coloring");
    verify->add_option("--in", in_path)->required();
    verify->add_option("--coloring", coloring_path)->required();

    std::size_t limit = 20;
    auto* oracle = app.add_subcommand("oracle", "Exact subchromatic number");
    oracle->add_option("--in", in_path)->required();
    oracle->add_option("--limit", limit, "Largest n accepted");
    oracle->add_option("--out", out_path, "Write the optimal coloring");

    bool tree_flag = false, delta_flag = false;
    auto* dec = app.add_subcommand("decompose", "Print the decomposition");
    dec->add_option("--in", in_path)->required();
    dec->add_option("--out", out_path);
    auto* tree_opt = dec->add_flag("--tree", tree_flag, "Separator tree");
    auto* delta_opt = dec->add_flag("--delta", delta_flag, "Delta pieces");
    tree_opt->excludes(delta_opt);

    bool axes = false;
    auto* render = app.add_subcommand("render", "Draw an instance as SVG");
    render->add_option("--in", in_path)->required();
    render->add_option("--coloring", coloring_path);
    render->add_option("--out", out_path);
    render->add_flag("--axes", axes, "Draw the coordinate axes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) {
            if (*gen_bc_cmd) {
                BCInstance bc = gen_bc(g.k);
                emit(g.out, serialize_instance(bc.disks));
                if (!g.graph_out.empty()) write_file(g.graph_out, serialize_graph(bc.graph));
            } else if (*gen_iv) {
                IntervalSet iv = g.intervals.empty() ? gen_random_intervals(g.n, g.seed)
                                                     : IntervalSet(read_intervals(g.intervals));
                emit(g.out, serialize_instance(gen_interval_to_delta(iv).instance()));
            } else if (*gen_gad) {
                emit(g.out, serialize_graph(gen_gadget(parse_gadget(g.gadget, g.param))));
            } else if (*gen_unit) {
                emit(g.out, serialize_instance(gen_random_unit(g.n, g.width, g.seed)));
            } else if (*gen_delta) {
                emit(g.out, serialize_instance(gen_random_delta(g.n, g.dmin, g.dmax, g.seed)));
            } else if (*gen_disk) {
                emit(g.out, serialize_instance(gen_random_disks(g.n, g.rmin, g.rmax, g.width, g.seed)));
            }
            return exit_ok;
        }
        if (*color) return run_color(ca);
        if (*verify) return run_verify(in_path, coloring_path);
        if (*oracle) return run_oracle(in_path, limit, out_path);
        if (*dec) {
            if (!tree_flag && !delta_flag) throw InputError("decompose needs --tree or --delta");
            return run_decompose(in_path, delta_flag, out_path);
        }
        if (*render) return run_render(in_path, coloring_path, out_path, axes);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return exit_violation;
    } catch (const EmbeddingError& e) {
        std::cerr << "embedding failed: " << e.what() << '\n';
        return exit_violation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
