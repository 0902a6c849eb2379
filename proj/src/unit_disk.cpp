#include "subcolor/unit_disk.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "subcolor/error.h"
#include "subcolor/solver.h"

namespace subcolor {
namespace {

std::int64_t euclid_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t floor_to_int(double v) {
    return static_cast<std::int64_t>(std::floor(v));
}

void require_unit(const DiskInstance& instance) {
    if (instance.kind() != InstanceKind::unit)
        throw InputError(std::string("expected a unit instance, got ") + to_string(instance.kind()));
}

}  // namespace

Point hex_center(HexCell cell) {
    const double offset = euclid_mod(cell.i, 2) == 1 ? hex_col_pitch / 2 : 0.0;
    return Point(static_cast<double>(cell.j) * hex_col_pitch + offset,
                 static_cast<double>(cell.i) * hex_row_pitch);
}

HexCell hex_cell_of(const Point& p) {
    const std::int64_t i0 = floor_to_int(p.y / hex_row_pitch);
    HexCell best;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::int64_t i = i0 - 1; i <= i0 + 2; ++i) {
        const double offset = euclid_mod(i, 2) == 1 ? hex_col_pitch / 2 : 0.0;
        const std::int64_t j0 = floor_to_int((p.x - offset) / hex_col_pitch);
        for (std::int64_t j = j0 - 1; j <= j0 + 2; ++j) {
            const HexCell cell{i, j};
            const double d = squared_distance(p, hex_center(cell));
            // Candidates are visited in increasing (i, j), so strict < keeps the smaller on ties.
            if (d < best_d) {
                best_d = d;
                best = cell;
            }
        }
    }
    return best;
}

int isbell_color(HexCell cell) {
    const std::int64_t m = (cell.i - euclid_mod(cell.i, 2)) / 2;
    const std::int64_t row_shift = euclid_mod(cell.i, 2) == 0 ? 5 * m : 5 * m + 3;
    return static_cast<int>(euclid_mod(cell.j + row_shift, 7));
}

Coloring color_unit_7(const DiskInstance& instance) {
    require_unit(instance);
    if (!instance.has_dense_ids()) throw InputError("coloring needs disk ids 0..n-1");
    Coloring c(instance.size(), 0);
    for (const Disk& d : instance.disks())
        c[d.id] = static_cast<Color>(isbell_color(hex_cell_of(d.center)));
    return c;
}

Region region_of(const Point& center) {
    const std::int64_t fx = floor_to_int(center.x);
    const std::int64_t fy = floor_to_int(center.y);
    if (euclid_mod(fy, 2) == 0 && euclid_mod(fx, 4) != 0) return Region::R0;
    if (euclid_mod(fy, 2) == 1 && euclid_mod(fx, 4) != 2) return Region::R1;
    return Region::R2;
}

UnitApprox approx3_unit(const DiskInstance& instance) {
    require_unit(instance);
    const Graph g = build_intersection_graph(instance);
    const std::size_t n = g.size();
    if (n == 0) return {Coloring(), 1, 0};
    if (is_cluster_graph(g)) return {Coloring(n, 0), 1, 1};

    SolverOptions options;
    options.size_limit = std::numeric_limits<std::size_t>::max();
    options.node_budget = 10'000'000;

    Coloring c(n, 0);
    for (int r = 0; r < 3; ++r) {
        std::vector<Vertex> members;
        for (const Disk& d : instance.disks())
            if (static_cast<int>(region_of(d.center)) == r) members.push_back(d.id);
        std::sort(members.begin(), members.end());
        const Graph h = g.induced(members);
        for (const auto& comp : connected_components(h)) {
            const Graph piece = h.induced(comp);
            auto two = decide_k_subcoloring(piece, 2, {}, options);
            if (!two) return {color_unit_7(instance), 3, 7};
            for (std::size_t t = 0; t < comp.size(); ++t)
                c[members[comp[t]]] = static_cast<Color>(2 * r) + (*two)[t];
        }
    }
    if (!validate_subcoloring(g, c))
        throw InvariantViolation("region 6-coloring is not a subcoloring");
    return {c, 2, 6};
}

}  // namespace subcolor
