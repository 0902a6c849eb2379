#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace subcolor {

using Vertex = std::size_t;

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    /// Throws InputError on NaN or infinite coordinates.
    Point(double x_, double y_);

    friend bool operator==(const Point&, const Point&) = default;
};

struct Disk {
    Vertex id = 0;
    Point center;
    double radius = 1.0;

    Disk() = default;
    /// Throws InputError unless radius is finite and > 0.
    Disk(Vertex id_, Point center_, double radius_);

    friend bool operator==(const Disk&, const Disk&) = default;
};

enum class InstanceKind { general, unit, delta };

const char* to_string(InstanceKind kind);
InstanceKind parse_kind(const std::string& text);

/// Radius of every disk in a unit instance (diameter 1).
inline constexpr double unit_radius = 0.5;

/// A finite set of closed disks. Ids are unique; a unit instance has all
/// radii 1/2 and a delta instance satisfies the delta-disk constraints.
class DiskInstance {
public:
    DiskInstance() = default;
    DiskInstance(InstanceKind kind, std::vector<Disk> disks);

    InstanceKind kind() const { return kind_; }
    const std::vector<Disk>& disks() const { return disks_; }
    std::size_t size() const { return disks_.size(); }
    bool empty() const { return disks_.empty(); }

    /// True iff the ids are exactly 0..n-1 (in any order).
    bool has_dense_ids() const { return dense_; }
    /// Disk with the given id. Requires dense ids.
    const Disk& disk(Vertex id) const;

    friend bool operator==(const DiskInstance& a, const DiskInstance& b) {
        return a.kind_ == b.kind_ && a.disks_ == b.disks_;
    }

private:
    InstanceKind kind_ = InstanceKind::general;
    std::vector<Disk> disks_;
    std::vector<std::size_t> position_;  // id -> index, when dense
    bool dense_ = true;
};

inline double squared_distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Closed-disk intersection: tangent disks intersect.
bool disks_intersect(const Disk& a, const Disk& b);

/// Closed membership: boundary points are inside.
bool point_in_disk(const Point& p, const Disk& d);

/// Element at index ceil(n/2)-1 of the sorted values. Throws on empty input.
double median_coordinate(std::span<const double> values);

}  // namespace subcolor
