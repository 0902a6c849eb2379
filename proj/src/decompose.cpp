#include "subcolor/decompose.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "subcolor/error.h"
#include "subcolor/io.h"

namespace subcolor {
namespace {

void require_dense(const DiskInstance& instance) {
    if (!instance.has_dense_ids()) throw InputError("decomposition needs disk ids 0..n-1");
}

bool is_clique(const DiskInstance& instance, const std::vector<Vertex>& part) {
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
            if (!disks_intersect(instance.disk(part[i]), instance.disk(part[j]))) return false;
    return true;
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

}  // namespace

HorizontalSplit horizontal_median_separator(const DiskInstance& instance,
                                            const std::vector<Vertex>& subset) {
    if (subset.empty()) throw InputError("horizontal separator of an empty vertex set");
    std::vector<double> ys;
    ys.reserve(subset.size());
    for (Vertex v : subset) ys.push_back(instance.disk(v).center.y);
    HorizontalSplit out;
    out.y_median = median_coordinate(ys);
    for (Vertex v : subset) {
        const Disk& d = instance.disk(v);
        if (std::abs(d.center.y - out.y_median) <= d.radius)
            out.S.push_back(v);
        else
            (d.center.y < out.y_median ? out.A : out.B).push_back(v);
    }
    return out;
}

Disk transform_to_delta(const Disk& disk, const Point& P, int quadrant) {
    const double dx = disk.center.x - P.x;
    const double dy = disk.center.y - P.y;
    const bool ok = (quadrant == 1 && dx > 0 && dy > 0) || (quadrant == 2 && dx < 0 && dy > 0) ||
                    (quadrant == 3 && dx < 0 && dy < 0) || (quadrant == 4 && dx > 0 && dy < 0);
    if (!ok)
        throw InputError("disk " + std::to_string(disk.id) + " is not strictly inside quadrant " +
                         std::to_string(quadrant));
    Disk out(disk.id, Point(std::abs(dx), std::abs(dy)), disk.radius);
    if (!is_delta_disk(out))
        throw InputError("disk " + std::to_string(disk.id) +
                         " must cross both lines and avoid their crossing point");
    return out;
}

VerticalSplit vertical_split_linear(const DiskInstance& instance, const std::vector<Vertex>& subset,
                                    double y_line) {
    if (subset.empty()) throw InputError("vertical split of an empty vertex set");
    std::vector<double> xs;
    xs.reserve(subset.size());
    for (Vertex v : subset) {
        const Disk& d = instance.disk(v);
        if (std::abs(d.center.y - y_line) > d.radius)
            throw InputError("disk " + std::to_string(v) + " does not meet the horizontal line");
        xs.push_back(d.center.x);
    }
    VerticalSplit out;
    out.x_median = median_coordinate(xs);
    out.P = Point(out.x_median, y_line);

    std::array<std::vector<Disk>, 4> moved;
    for (Vertex v : subset) {
        const Disk& d = instance.disk(v);
        const double dx = d.center.x - out.x_median;
        if (std::abs(dx) > d.radius) {
            (dx < 0 ? out.left : out.right).push_back(v);
            continue;
        }
        out.crossing.push_back(v);
        if (point_in_disk(out.P, d)) {
            out.V5.push_back(v);
            continue;
        }
        const double dy = d.center.y - y_line;
        if (dx == 0.0 || dy == 0.0)
            throw InvariantViolation("disk " + std::to_string(v) +
                                     " is centred on a split line but misses the crossing point");
        const int q = dx > 0 ? (dy > 0 ? 1 : 4) : (dy > 0 ? 2 : 3);
        Disk t;
        try {
            t = transform_to_delta(d, out.P, q);
        } catch (const InputError& e) {
            throw InvariantViolation(e.what());
        }
        auto& piece = out.quadrant[static_cast<std::size_t>(q - 1)];
        t.id = piece.members.size();
        piece.members.push_back(v);
        moved[static_cast<std::size_t>(q - 1)].push_back(t);
    }
    for (std::size_t q = 0; q < 4; ++q)
        out.quadrant[q].rep = DeltaRepresentation(DiskInstance(InstanceKind::delta, moved[q]));
    if (!is_clique(instance, out.V5))
        throw InvariantViolation("V5 bucket is not a clique");
    return out;
}

namespace {

class Builder {
public:
    explicit Builder(const DiskInstance& instance) : instance_(instance) {}

    int disk_node(std::vector<Vertex> members, std::size_t depth) {
        if (members.empty()) return -1;
        DiskNode node;
        node.depth = depth;
        node.split = horizontal_median_separator(instance_, members);
        if (node.split.S.empty())
            throw InvariantViolation("empty horizontal separator on a non-empty set");
        node.members = std::move(members);
        const int index = static_cast<int>(tree_.disk.size());
        tree_.disk.push_back(node);

        const int lin = linear_node(node.split.S, depth, 0, node.split.y_median);
        const int below = disk_node(node.split.A, depth + 1);
        const int above = disk_node(node.split.B, depth + 1);
        DiskNode& stored = tree_.disk[static_cast<std::size_t>(index)];
        stored.linear_root = lin;
        stored.below_child = below;
        stored.above_child = above;
        return index;
    }

    int linear_node(const std::vector<Vertex>& members, std::size_t disk_depth,
                    std::size_t depth, double y_line) {
        if (members.empty()) return -1;
        LinearNode node;
        node.disk_depth = disk_depth;
        node.linear_depth = depth;
        node.members = members;
        node.split = vertical_split_linear(instance_, members, y_line);
        if (node.split.crossing.empty())
            throw InvariantViolation("empty vertical separator on a non-empty set");
        const int index = static_cast<int>(tree_.linear.size());
        tree_.linear.push_back(node);
        const int left = linear_node(node.split.left, disk_depth, depth + 1, y_line);
        const int right = linear_node(node.split.right, disk_depth, depth + 1, y_line);
        tree_.linear[static_cast<std::size_t>(index)].left_child = left;
        tree_.linear[static_cast<std::size_t>(index)].right_child = right;
        return index;
    }

    DecompositionTree take() { return std::move(tree_); }

private:
    const DiskInstance& instance_;
    DecompositionTree tree_;
};

}  // namespace

DecompositionTree decompose(const DiskInstance& instance) {
    require_dense(instance);
    Builder b(instance);
    std::vector<Vertex> all(instance.size());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    b.disk_node(all, 0);
    return b.take();
}

namespace {

std::string list_issue(const std::string& where, const std::string& what) {
    return where + ": " + what;
}

bool has_cross_edge(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<char> in_b(g.size(), 0);
    for (Vertex v : b) in_b[v] = 1;
    for (Vertex u : a)
        for (Vertex w : g.neighbors(u))
            if (in_b[w]) return true;
    return false;
}

std::vector<Vertex> sorted_union(std::initializer_list<const std::vector<Vertex>*> parts) {
    std::vector<Vertex> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<std::string> verify_tree(const DiskInstance& instance, const Graph& g,
                                     const DecompositionTree& tree) {
    std::vector<std::string> issues;
    for (std::size_t i = 0; i < tree.disk.size(); ++i) {
        const DiskNode& node = tree.disk[i];
        const std::string where = "disk node " + std::to_string(i);
        const std::size_t n = node.members.size();
        const auto& s = node.split;
        if (s.A.size() > (n + 1) / 2 || s.B.size() > (n + 1) / 2)
            issues.push_back(list_issue(where, "unbalanced sides"));
        if (n > 0 && s.S.empty()) issues.push_back(list_issue(where, "empty separator"));
        if (has_cross_edge(g, s.A, s.B)) issues.push_back(list_issue(where, "edge between sides"));
        if (sorted_union({&s.S, &s.A, &s.B}) != sorted_copy(node.members))
            issues.push_back(list_issue(where, "parts do not partition the node"));
        for (Vertex v : s.S) {
            const Disk& d = instance.disk(v);
            if (std::abs(d.center.y - s.y_median) > d.radius)
                issues.push_back(list_issue(where, "separator disk misses the line"));
        }
        auto child_ok = [&](int child, const std::vector<Vertex>& side) {
            if (side.empty()) return child == -1;
            return child >= 0 && sorted_copy(tree.disk[static_cast<std::size_t>(child)].members) ==
                                     sorted_copy(side);
        };
        if (!child_ok(node.below_child, s.A) || !child_ok(node.above_child, s.B))
            issues.push_back(list_issue(where, "children do not match the sides"));
        if (node.linear_root < 0 ||
            sorted_copy(tree.linear[static_cast<std::size_t>(node.linear_root)].members) !=
                sorted_copy(s.S))
            issues.push_back(list_issue(where, "linear root does not cover the separator"));
    }
    for (std::size_t i = 0; i < tree.linear.size(); ++i) {
        const LinearNode& node = tree.linear[i];
        const std::string where = "linear node " + std::to_string(i);
        const std::size_t n = node.members.size();
        const auto& s = node.split;
        if (s.left.size() > (n + 1) / 2 || s.right.size() > (n + 1) / 2)
            issues.push_back(list_issue(where, "unbalanced sides"));
        if (n > 0 && s.crossing.empty()) issues.push_back(list_issue(where, "empty separator"));
        if (has_cross_edge(g, s.left, s.right))
            issues.push_back(list_issue(where, "edge between sides"));
        if (sorted_union({&s.crossing, &s.left, &s.right}) != sorted_copy(node.members))
            issues.push_back(list_issue(where, "parts do not partition the node"));
        std::vector<Vertex> pieces = s.V5;
        for (const DeltaPiece& piece : s.quadrant) {
            pieces.insert(pieces.end(), piece.members.begin(), piece.members.end());
            if (!validate_delta(piece.rep.instance()))
                issues.push_back(list_issue(where, "quadrant piece is not a delta instance"));
            if (build_intersection_graph(piece.rep.instance()) != g.induced(piece.members))
                issues.push_back(list_issue(where, "quadrant transform changed adjacency"));
        }
        if (sorted_copy(pieces) != sorted_copy(s.crossing))
            issues.push_back(list_issue(where, "pieces do not partition the separator"));
        if (!is_clique(instance, s.V5)) issues.push_back(list_issue(where, "V5 is not a clique"));
    }
    return issues;
}

std::string describe_tree(const DecompositionTree& tree) {
    std::ostringstream os;
    auto ids = [](const std::vector<Vertex>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    for (std::size_t i = 0; i < tree.disk.size(); ++i) {
        const DiskNode& d = tree.disk[i];
        os << "disk " << i << " depth " << d.depth << " y " << format_number(d.split.y_median)
           << " S " << ids(d.split.S) << " A " << ids(d.split.A) << " B " << ids(d.split.B)
           << " linear " << d.linear_root << " below " << d.below_child << " above "
           << d.above_child << '\n';
    }
    for (std::size_t i = 0; i < tree.linear.size(); ++i) {
        const LinearNode& l = tree.linear[i];
        os << "linear " << i << " disk_depth " << l.disk_depth << " depth " << l.linear_depth
           << " x " << format_number(l.split.x_median) << " P " << format_number(l.split.P.x)
           << ' ' << format_number(l.split.P.y);
        for (std::size_t q = 0; q < 4; ++q) os << " Q" << q + 1 << ' ' << ids(l.split.quadrant[q].members);
        os << " V5 " << ids(l.split.V5) << " left " << ids(l.split.left) << " right "
           << ids(l.split.right) << " children " << l.left_child << ' ' << l.right_child << '\n';
    }
    return os.str();
}

namespace {

using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

Coloring flatten(const std::vector<Key>& keys) {
    std::map<Key, Color> index;
    Coloring c(keys.size(), 0);
    for (std::size_t v = 0; v < keys.size(); ++v)
        c[v] = index.try_emplace(keys[v], index.size()).first->second;
    return c;
}

void require_valid(const DiskInstance& instance, const Coloring& c, const char* what) {
    const Graph g = build_intersection_graph(instance);
    if (auto p3 = find_monochromatic_p3(g, c))
        throw InvariantViolation(std::string(what) + " produced a monochromatic P3 " +
                                 std::to_string(p3->a) + "-" + std::to_string(p3->b) + "-" +
                                 std::to_string(p3->c));
}

}  // namespace

Coloring color_disk_log3(const DiskInstance& instance) {
    require_dense(instance);
    const DecompositionTree tree = decompose(instance);
    const std::size_t palette = 2 * ceil_log2(instance.size()) + 1;
    std::vector<Key> keys(instance.size());
    for (const LinearNode& node : tree.linear) {
        for (std::size_t q = 0; q < 4; ++q) {
            const DeltaPiece& piece = node.split.quadrant[q];
            if (piece.members.empty()) continue;
            const Coloring c = delta_color_log(piece.rep);
            for (std::size_t i = 0; i < piece.members.size(); ++i)
                keys[piece.members[i]] = {node.disk_depth, node.linear_depth, 0, q * palette + c[i]};
        }
        for (Vertex v : node.split.V5)
            keys[v] = {node.disk_depth, node.linear_depth, 0, 4 * palette};
    }
    Coloring c = flatten(keys);
    require_valid(instance, c, "color_disk_log3");
    return c;
}

DiskApprox color_disk_approx(const DiskInstance& instance) {
    require_dense(instance);
    const DecompositionTree tree = decompose(instance);
    std::vector<Key> keys(instance.size());
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> groups;
    DiskApprox out;
    for (const LinearNode& node : tree.linear) {
        for (std::size_t q = 0; q < 4; ++q) {
            const DeltaPiece& piece = node.split.quadrant[q];
            if (piece.members.empty()) continue;
            const DeltaApprox a = delta_color_approx(piece.rep);
            out.lower_bound = std::max(out.lower_bound, a.k);
            groups.emplace(node.disk_depth, node.linear_depth, q);
            for (std::size_t i = 0; i < piece.members.size(); ++i)
                keys[piece.members[i]] = {node.disk_depth, node.linear_depth, q, a.coloring[i]};
        }
        if (!node.split.V5.empty()) groups.emplace(node.disk_depth, node.linear_depth, 4);
        for (Vertex v : node.split.V5) keys[v] = {node.disk_depth, node.linear_depth, 4, 0};
    }
    out.coloring = flatten(keys);
    out.groups = groups.size();
    // A non-empty graph needs one color even when every piece is a V5 clique.
    if (!instance.empty()) out.lower_bound = std::max<std::size_t>(out.lower_bound, 1);
    require_valid(instance, out.coloring, "color_disk_approx");
    return out;
}

}  // namespace subcolor
