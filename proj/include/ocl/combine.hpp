#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocl/colorers.hpp"
#include "ocl/graph.hpp"

namespace ocl {

/// Outcome of a combined run: the emitted coloring plus the per-step choice
/// log and the final simulated color counts of every sub-algorithm.
struct CombineResult {
    RunResult result;
    std::vector<int> chosen;       // per step: index of the followed sub-algorithm
    std::vector<int> sub_distinct; // distinct colors of each full sub-simulation
};

/// Meta-algorithm combining t online colorers on disjoint palettes. Every
/// sub-colorer is advanced on every reveal against its own private coloring;
/// the emitted color is the choice of the sub-colorer whose simulated count
/// (including the current vertex) is minimal, ties to the lowest index. Each
/// sub-colorer's palette tags are prepended with its prefix ("A1/", "A2/",
/// ... by default), which keeps the emitted coloring proper structurally.
CombineResult combine(const std::vector<ColorerFactory>& colorers, const OnlineInstance& inst,
                      std::vector<std::string> prefixes = {});

/// Result of the known-chromatic-number variant.
struct APrimeResult {
    RunResult result;
    std::optional<int> switch_position; // 1-based reveal position opening phase 2
    std::vector<int> phase2_chosen;     // choice log of the suffix combination
};

/// Phase 1 colors each vertex with rank 0 of its predicted label. On the
/// first vertex where either k+1 distinct labels have been predicted (the
/// trigger vertex included) or following the prediction would be improper,
/// control passes to combine([FFP, classical]) on the suffix starting at that
/// vertex, with palettes kept disjoint from every predicted label.
/// Requires predictions; k is trusted, not checked against the oracle.
APrimeResult a_prime(int k, const ColorerFactory& classical, const OnlineInstance& inst);

} // namespace ocl
