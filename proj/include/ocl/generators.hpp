#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ocl/graph.hpp"
#include "ocl/oracle.hpp"

namespace ocl {

/// The two crown-style FirstFit nemesis graphs on 2n vertices.
enum class CrownVariant {
    /// K_{n,n} minus a perfect matching, revealed in matched non-adjacent
    /// pairs (v_i, u_i): FirstFit is forced to n colors while chi = 2.
    minus_matching,
    /// The same graph plus the edge v_1 u_1, same reveal order: FirstFit uses
    /// two colors on the full instance but n-1 on the suffix dropping v_1, u_1.
    linked_pair,
};

/// Crown instance: v_i is vertex i-1, u_i is vertex n+i-1, reveal order
/// v_1, u_1, v_2, u_2, ..., v_n, u_n. No predictions. Requires n >= 2.
OnlineInstance gen_crown(int n, CrownVariant variant);

/// k disjoint k-cliques, block i linked to block 1 by an edge from the first
/// vertex, revealed block by block, every vertex of block i predicted "c<i>".
/// chi = k; FirstFitPredictions opens k ranks in each of the k palettes.
/// Requires k >= 2.
OnlineInstance gen_kk_blocks(int k);

/// Edgeless instance plus the adversarial scripts that make the combiner pay
/// a factor of t: script i spends color "c<i>"#0 on the first i vertices and
/// a fresh rank on each vertex after that.
struct SingletonsFamily {
    OnlineInstance instance;
    std::vector<std::vector<Color>> scripts; // scripts[i-1] drives algorithm A_i
};

SingletonsFamily gen_singletons(int t);

/// Seeded Erdos-Renyi-style instance: each pair independently an edge with
/// probability p, reveal order a seeded shuffle. Byte-identical across runs
/// for the same parameters.
OnlineInstance gen_random(int n, double p, std::uint64_t seed);

/// How to fabricate predictions for an instance.
struct PredictionModel {
    enum class Kind { none, perfect, corrupted, blockwise };

    Kind kind = Kind::none;
    double rate = 0.0;                  // corrupted only
    std::map<int, ColorLabel> blocks;   // blockwise only

    static PredictionModel none() { return {}; }
    static PredictionModel perfect() { return {Kind::perfect, 0.0, {}}; }
    static PredictionModel corrupted(double rate);
    static PredictionModel blockwise(std::map<int, ColorLabel> blocks);
};

/// Returns a copy of the instance carrying predictions from the model.
/// perfect reads labels "c1".."c<chi>" off the first oracle-enumerated
/// optimal partition; corrupted starts perfect and re-rolls each vertex
/// independently with the given rate to a different label drawn from the
/// optimal palette plus one fresh label; blockwise installs the given map;
/// none strips predictions.
OnlineInstance attach_predictions(const OnlineInstance& inst, const PredictionModel& model,
                                  std::uint64_t seed, const OracleLimits& limits = {});

} // namespace ocl
