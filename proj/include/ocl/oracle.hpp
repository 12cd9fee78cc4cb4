#pragma once

#include <optional>
#include <vector>

#include "ocl/graph.hpp"

namespace ocl {

/// Size limits for the exact oracle. The worst case is exponential; anything
/// over a limit is refused loudly rather than approximated silently.
struct OracleLimits {
    int chromatic_n = 20;   // max vertices for chromatic_number
    int enumeration_n = 14; // max vertices for full partition enumeration / eta
    int assignment_chi = 8; // max classes for the agreement-maximizing assignment

    /// Defaults with OCL_ORACLE_LIMIT (when set) overriding both vertex limits.
    static OracleLimits from_env();
};

/// Exact chromatic number via backtracking k-colorability checks between a
/// greedy clique lower bound and a greedy coloring upper bound.
int chromatic_number(const Graph& graph, const OracleLimits& limits = {});

/// Clique found by the max-degree greedy heuristic; its size lower-bounds chi.
std::vector<int> greedy_clique(const Graph& graph);

/// Partition of V into exactly chi(G) independent classes. Canonical form:
/// classes ordered by their smallest member, members sorted ascending.
struct OptimalPartition {
    std::vector<std::vector<int>> classes;

    bool operator==(const OptimalPartition&) const = default;
};

/// Streams every optimal partition exactly once, in canonical order (the
/// class containing vertex 0 first, then the class containing the smallest
/// unplaced vertex, and so on). Label permutations are quotiented out here;
/// the assignment search in prediction_error restores label freedom.
/// Single-consumer.
class OptimalPartitionEnumerator {
public:
    explicit OptimalPartitionEnumerator(const Graph& graph, const OracleLimits& limits = {});

    int chromatic() const { return chi_; }

    /// Next partition, or nullopt when exhausted.
    std::optional<OptimalPartition> next();

private:
    const Graph& graph_;
    int chi_;
    bool exhausted_ = false;
    int depth_ = 0;
    int used_ = 0;
    std::vector<int> cls_;      // class of vertex v, -1 if unassigned
    std::vector<int> try_next_; // next class index to try at each depth
    std::vector<int> class_size_;
};

/// Witness for the prediction error: eta together with the optimal partition
/// and injective class-to-label assignment realizing it.
struct EtaResult {
    int eta = 0;
    OptimalPartition witness_partition;
    std::vector<ColorLabel> witness_assignment; // class index -> label
};

/// Exact prediction error: minimum over all optimal partitions and all
/// injective class-to-label assignments of the number of vertices whose
/// prediction disagrees with their class label. Per partition the best
/// assignment maximizes agreement; a class may always take a fresh unused
/// label at agreement zero.
EtaResult prediction_error(const OnlineInstance& inst, const OracleLimits& limits = {});

} // namespace ocl
