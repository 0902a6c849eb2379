#include "subcolor/geometry.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "subcolor/delta_disk.h"
#include "subcolor/error.h"

namespace subcolor {

Point::Point(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw InputError("point coordinates must be finite");
}

Disk::Disk(Vertex id_, Point center_, double radius_)
    : id(id_), center(center_), radius(radius_) {
    if (!std::isfinite(radius) || !(radius > 0.0))
        throw InputError("disk " + std::to_string(id) + ": radius must be finite and positive");
}

const char* to_string(InstanceKind kind) {
    switch (kind) {
    case InstanceKind::general: return "general";
    case InstanceKind::unit: return "unit";
    case InstanceKind::delta: return "delta";
    }
    return "general";
}

InstanceKind parse_kind(const std::string& text) {
    if (text == "general") return InstanceKind::general;
    if (text == "unit") return InstanceKind::unit;
    if (text == "delta") return InstanceKind::delta;
    throw InputError("unknown instance kind '" + text + "'");
}

DiskInstance::DiskInstance(InstanceKind kind, std::vector<Disk> disks)
    : kind_(kind), disks_(std::move(disks)) {
    const std::size_t n = disks_.size();
    position_.assign(n, n);
    std::vector<Vertex> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex id = disks_[i].id;
        ids.push_back(id);
        if (id < n) {
            if (position_[id] != n)
                throw InputError("duplicate disk id " + std::to_string(id));
            position_[id] = i;
        } else {
            dense_ = false;
        }
    }
    if (!dense_) {
        position_.clear();
        std::sort(ids.begin(), ids.end());
        auto dup = std::adjacent_find(ids.begin(), ids.end());
        if (dup != ids.end())
            throw InputError("duplicate disk id " + std::to_string(*dup));
    }

    if (kind_ == InstanceKind::unit) {
        for (const Disk& d : disks_)
            if (d.radius != unit_radius)
                throw InputError("unit instance: disk " + std::to_string(d.id) +
                                 " has radius other than 0.5");
    } else if (kind_ == InstanceKind::delta) {
        for (const Disk& d : disks_)
            if (!is_delta_disk(d))
                throw InputError("delta instance: disk " + std::to_string(d.id) +
                                 " violates max(x,y) <= r < |center|");
    }
}

const Disk& DiskInstance::disk(Vertex id) const {
    if (!dense_ || id >= disks_.size())
        throw InputError("disk id " + std::to_string(id) + " not addressable");
    return disks_[position_[id]];
}

bool disks_intersect(const Disk& a, const Disk& b) {
    const double s = a.radius + b.radius;
    return squared_distance(a.center, b.center) <= s * s;
}

bool point_in_disk(const Point& p, const Disk& d) {
    return squared_distance(p, d.center) <= d.radius * d.radius;
}

double median_coordinate(std::span<const double> values) {
    if (values.empty())
        throw InputError("median of an empty list");
    std::vector<double> v(values.begin(), values.end());
    const std::size_t k = (v.size() + 1) / 2 - 1;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    return v[k];
}

}  // namespace subcolor
