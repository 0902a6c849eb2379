#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "subcolor/graph.h"

namespace subcolor {

/// Colors pinned before the search starts.
using PartialAssignment = std::map<Vertex, Color>;

struct SolverOptions {
    /// Largest n accepted; larger graphs raise SizeGuardError.
    std::size_t size_limit = 64;
    /// Search nodes (branching decisions) before SizeGuardError.
    std::uint64_t node_budget = 100'000'000;
    /// Interchangeable unused colors are tried once. Disable to enumerate
    /// every labelled solution.
    bool symmetry_breaking = true;

    static SolverOptions exact() {
        SolverOptions o;
        o.size_limit = 20;
        return o;
    }
};

/// A subcoloring with colors < k extending `fixed`, or nullopt if none exists.
std::optional<Coloring> decide_k_subcoloring(const Graph& g, std::size_t k,
                                             const PartialAssignment& fixed = {},
                                             const SolverOptions& options = {});

/// Calls `visit` on every solution (with symmetry breaking off: every
/// labelled k-subcoloring). Stops early when `visit` returns false.
/// Returns the number of solutions visited.
std::size_t enumerate_k_subcolorings(const Graph& g, std::size_t k,
                                     const PartialAssignment& fixed,
                                     const std::function<bool(const Coloring&)>& visit,
                                     const SolverOptions& options = {});

struct ExactResult {
    std::size_t k = 0;
    Coloring coloring;
};

/// Minimum number of colors of a subcoloring, with a witness.
ExactResult exact_subchromatic(const Graph& g, const SolverOptions& options = SolverOptions::exact());

}  // namespace subcolor
