#pragma once

#include <string>
#include <vector>

#include "ocl/colorers.hpp"
#include "ocl/graph.hpp"

namespace ocl {

/// Disjoint non-trivial cliques extracted from a FirstFit run that used x
/// colors: q+1 parts, each of size >= 2, total size x + q, 0 <= q <= x - 2.
struct CliquePartition {
    std::vector<std::vector<int>> cliques; // parts V'_0 .. V'_q, members sorted
    int x = 0;                             // colors used by the FirstFit run
    int q = 0;                             // cliques.size() - 1
};

/// Constructive extraction: picks a witness of the top color and one
/// earlier-revealed neighbor per smaller color, splits off the vertices whose
/// smaller-colored in-witness neighborhood is complete, and pairs each
/// remaining witness vertex with an outside neighbor holding its blocking
/// color. The induction invariant (each part stays a clique, new members
/// carry strictly larger colors than the part's outside anchor) is asserted
/// at every append; a violation raises Error("structural violation ..."),
/// which would indicate a bug rather than a property of the input.
///
/// Requires run to be a FirstFit run on this graph with x >= 2.
CliquePartition extract_clique_partition(const Graph& graph, const RunResult& run);

/// Independent checker for the extraction's contract. Returns true iff the
/// parts are disjoint, every part has size >= 2 and is a clique in the graph,
/// the sizes sum to x + q, and 0 <= q <= x - 2. Never throws; failed checks
/// are reported through the reasons list.
bool verify_partition(const Graph& graph, const CliquePartition& partition,
                      std::vector<std::string>* reasons = nullptr);

} // namespace ocl
