#pragma once

#include <cstdint>

#include "subcolor/geometry.h"
#include "subcolor/graph.h"

namespace subcolor {

/// Pointy-top hexagon of circumradius 1/2. Row i is centred at y = 0.75 i;
/// column j at x = j*sqrt(3)/2, plus sqrt(3)/4 on odd rows.
struct HexCell {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

inline constexpr double hex_col_pitch = 0.86602540378443864676;  // sqrt(3)/2
inline constexpr double hex_row_pitch = 0.75;

Point hex_center(HexCell cell);

/// Cell whose centre is nearest to p; ties go to the smaller (i, j).
HexCell hex_cell_of(const Point& p);

/// Isbell's 7-coloring: +1 to the right, +4 below-left, +5 below-right.
int isbell_color(HexCell cell);

/// Colors every disk by the cell of its centre. Requires a unit instance.
Coloring color_unit_7(const DiskInstance& instance);

enum class Region { R0 = 0, R1 = 1, R2 = 2 };

Region region_of(const Point& center);

struct UnitApprox {
    Coloring coloring;
    /// 1, 2 or 3; never exceeds the subchromatic number.
    std::size_t lower_bound = 1;
    /// Colors the pipeline stage may use: 1, 6 or 7 (0 when empty).
    std::size_t palette = 0;
};

/// Cluster test, then exact 2-subcoloring per region component, then
/// Isbell as the fallback.
UnitApprox approx3_unit(const DiskInstance& instance);

}  // namespace subcolor
