#include "subcolor/solver.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "subcolor/error.h"

namespace subcolor {
namespace {

/// Fixed-size bitset sized at runtime.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
    std::size_t words() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

private:
    std::vector<std::uint64_t> w_;
};

template <class F>
void for_each_bit(std::uint64_t word, std::size_t base, F f) {
    while (word) {
        f(base + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
    }
}

class Search {
public:
    Search(const Graph& g, std::size_t k, const SolverOptions& options)
        : g_(g), n_(g.size()), k_(k), opt_(options), nbr_(n_, Bits(n_)),
          members_(k, Bits(n_)), color_(n_, none), domain_(n_, full_mask(k)),
          anchored_(k, false) {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) nbr_[v].set(w);
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool pin(const PartialAssignment& fixed) {
        for (auto [v, c] : fixed) anchored_[c] = true;
        for (auto [v, c] : fixed)
            if (!assign_with_propagation(v, c)) return false;
        return true;
    }

    /// Depth-first search; `on_solution` returns false to stop.
    template <class OnSolution>
    bool run(OnSolution& on_solution) {
        std::size_t pos = 0;
        while (pos < n_ && color_[order_[pos]] != none) ++pos;
        if (pos == n_) return on_solution(Coloring(color_));
        const Vertex v = order_[pos];

        std::uint64_t choices = domain_[v];
        if (opt_.symmetry_breaking) {
            std::uint64_t fresh = 0;
            for (std::size_t c = 0; c < k_; ++c)
                if (!anchored_[c] && used_[c] == 0) fresh |= std::uint64_t{1} << c;
            const std::uint64_t lowest = (choices & fresh) & (~(choices & fresh) + 1);
            choices = (choices & ~fresh) | lowest;
        }
        while (choices) {
            const std::size_t c = static_cast<std::size_t>(std::countr_zero(choices));
            choices &= choices - 1;
            if (++nodes_ > opt_.node_budget)
                throw SizeGuardError("subcoloring search exceeded node budget of " +
                                     std::to_string(opt_.node_budget));
            const std::size_t mark = trail_.size();
            if (assign_with_propagation(v, c) && !run(on_solution)) return false;
            undo(mark);
        }
        return true;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    static std::uint64_t full_mask(std::size_t k) {
        return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    }

    enum class Kind : std::uint8_t { domain, color };
    struct TrailEntry {
        Kind kind;
        Vertex v;
        std::uint64_t old_domain;
    };

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry e = trail_.back();
            trail_.pop_back();
            if (e.kind == Kind::domain) {
                domain_[e.v] = e.old_domain;
            } else {
                const Color c = color_[e.v];
                members_[c].reset(e.v);
                --used_[c];
                color_[e.v] = none;
            }
        }
    }

    bool bar(Vertex w, Color c) {
        if (color_[w] != none) return color_[w] != c;
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (!(domain_[w] & bit)) return true;
        trail_.push_back({Kind::domain, w, domain_[w]});
        domain_[w] &= ~bit;
        if (domain_[w] == 0) return false;
        if (std::has_single_bit(domain_[w])) pending_.push_back(w);
        return true;
    }

    /// Assigns c to v, then forbids c on every vertex that would close a
    /// monochromatic P3 with v and an existing member of class c.
    bool assign(Vertex v, Color c) {
        if (color_[v] != none) return color_[v] == c;
        if (!(domain_[v] & (std::uint64_t{1} << c))) return false;
        const Bits& nv = nbr_[v];
        const Bits& cls = members_[c];
        for (std::size_t wi = 0; wi < cls.words(); ++wi) {
            bool ok = true;
            for_each_bit(cls.word(wi), wi * 64, [&](Vertex u) {
                if (!ok) return;
                const Bits& nu = nbr_[u];
                const bool adj = nv.test(u);
                for (std::size_t x = 0; x < nv.words() && ok; ++x) {
                    std::uint64_t barred = adj ? (nu.word(x) ^ nv.word(x))
                                               : (nu.word(x) & nv.word(x));
                    for_each_bit(barred, x * 64, [&](Vertex w) {
                        if (ok && w != u && w != v && !bar(w, c)) ok = false;
                    });
                }
            });
            if (!ok) return false;
        }
        trail_.push_back({Kind::color, v, 0});
        color_[v] = c;
        members_[c].set(v);
        ++used_[c];
        return true;
    }

    bool assign_with_propagation(Vertex v, Color c) {
        pending_.clear();
        if (!assign(v, c)) return false;
        while (!pending_.empty()) {
            const Vertex w = pending_.back();
            pending_.pop_back();
            if (color_[w] != none) continue;
            if (!assign(w, static_cast<Color>(std::countr_zero(domain_[w])))) return false;
        }
        return true;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t k_;
    SolverOptions opt_;
    std::vector<Bits> nbr_;
    std::vector<Bits> members_;
    std::vector<Color> color_;
    std::vector<std::uint64_t> domain_;
    std::vector<bool> anchored_;
    std::vector<std::size_t> used_ = std::vector<std::size_t>(64, 0);
    std::vector<Vertex> order_;
    std::vector<TrailEntry> trail_;
    std::vector<Vertex> pending_;
    std::uint64_t nodes_ = 0;
};

void check_request(const Graph& g, std::size_t k, const PartialAssignment& fixed,
                   const SolverOptions& options) {
    if (k == 0) throw InputError("k must be at least 1");
    if (k > 64) throw InputError("solver supports at most 64 colors");
    if (g.size() > options.size_limit)
        throw SizeGuardError("graph with " + std::to_string(g.size()) +
                             " vertices exceeds solver size limit " +
                             std::to_string(options.size_limit));
    for (auto [v, c] : fixed) {
        if (v >= g.size()) throw InputError("pinned vertex " + std::to_string(v) + " out of range");
        if (c >= k) throw InputError("pinned color " + std::to_string(c) + " not below k");
    }
}

}  // namespace

std::optional<Coloring> decide_k_subcoloring(const Graph& g, std::size_t k,
                                             const PartialAssignment& fixed,
                                             const SolverOptions& options) {
    check_request(g, k, fixed, options);
    Search search(g, k, options);
    if (!search.pin(fixed)) return std::nullopt;
    std::optional<Coloring> found;
    auto take = [&](const Coloring& c) {
        found = c;
        return false;
    };
    search.run(take);
    if (found && !validate_subcoloring(g, *found))
        throw InvariantViolation("solver produced an invalid subcoloring");
    return found;
}

std::size_t enumerate_k_subcolorings(const Graph& g, std::size_t k,
                                     const PartialAssignment& fixed,
                                     const std::function<bool(const Coloring&)>& visit,
                                     const SolverOptions& options) {
    check_request(g, k, fixed, options);
    Search search(g, k, options);
    if (!search.pin(fixed)) return 0;
    std::size_t count = 0;
    auto each = [&](const Coloring& c) {
        ++count;
        return visit(c);
    };
    search.run(each);
    return count;
}

ExactResult exact_subchromatic(const Graph& g, const SolverOptions& options) {
    if (g.size() > options.size_limit)
        throw SizeGuardError("graph with " + std::to_string(g.size()) +
                             " vertices exceeds exact solver limit " +
                             std::to_string(options.size_limit));
    if (g.size() == 0) return {0, Coloring()};
    for (std::size_t k = 1; k < g.size(); ++k)
        if (auto c = decide_k_subcoloring(g, k, {}, options)) return {k, c->canonical()};
    // Reached only for n = 1.
    std::vector<Color> own(g.size());
    std::iota(own.begin(), own.end(), Color{0});
    return {g.size(), Coloring(std::move(own))};
}

}  // namespace subcolor
