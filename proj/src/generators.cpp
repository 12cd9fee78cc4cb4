#include "ocl/generators.hpp"

#include <numeric>
#include <string>

#include "ocl/rng.hpp"

namespace ocl {

OnlineInstance gen_crown(int n, CrownVariant variant) {
    if (n < 2)
        throw ValidationError("crown instances need n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                edges.emplace_back(i - 1, n + j - 1);
    if (variant == CrownVariant::linked_pair)
        edges.emplace_back(0, n);
    std::vector<int> order;
    for (int i = 1; i <= n; ++i) {
        order.push_back(i - 1);     // v_i
        order.push_back(n + i - 1); // u_i
    }
    return make_instance(build_graph(2 * n, edges), std::move(order));
}

OnlineInstance gen_kk_blocks(int k) {
    if (k < 2)
        throw ValidationError("kk-blocks instances need k >= 2");
    const int n = k * k;
    std::vector<std::pair<int, int>> edges;
    std::map<int, ColorLabel> predictions;
    for (int block = 1; block <= k; ++block) {
        const int first = (block - 1) * k;
        for (int a = 0; a < k; ++a) {
            predictions[first + a] = "c" + std::to_string(block);
            for (int b = a + 1; b < k; ++b)
                edges.emplace_back(first + a, first + b);
        }
        if (block > 1)
            edges.emplace_back(0, first); // v_1 to v_block
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return make_instance(build_graph(n, edges), std::move(order), std::move(predictions));
}

SingletonsFamily gen_singletons(int t) {
    if (t < 1)
        throw ValidationError("singletons instances need t >= 1");
    std::vector<int> order(t);
    std::iota(order.begin(), order.end(), 0);
    SingletonsFamily family;
    family.instance = make_instance(build_graph(t, {}), std::move(order));
    for (int i = 1; i <= t; ++i) {
        std::vector<Color> script;
        const ColorLabel palette = "c" + std::to_string(i);
        for (int step = 0; step < t; ++step)
            script.push_back(Color{palette, step < i ? 0 : step - i + 1});
        family.scripts.push_back(std::move(script));
    }
    return family;
}

OnlineInstance gen_random(int n, double p, std::uint64_t seed) {
    if (n < 0)
        throw ValidationError("random instances need n >= 0");
    if (p < 0.0 || p > 1.0)
        throw ValidationError("edge probability must lie in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < p)
                edges.emplace_back(i, j);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int t = n - 1; t > 0; --t)
        std::swap(order[t], order[rng.next_below(t + 1)]);
    return make_instance(build_graph(n, edges), std::move(order));
}

PredictionModel PredictionModel::corrupted(double rate) {
    if (rate < 0.0 || rate > 1.0)
        throw ValidationError("corruption rate must lie in [0,1]");
    return {Kind::corrupted, rate, {}};
}

PredictionModel PredictionModel::blockwise(std::map<int, ColorLabel> blocks) {
    return {Kind::blockwise, 0.0, std::move(blocks)};
}

namespace {

std::map<int, ColorLabel> perfect_labels(const Graph& graph, const OracleLimits& limits) {
    OptimalPartitionEnumerator enumerator(graph, limits);
    auto first = enumerator.next();
    if (!first)
        throw Error("no optimal partition found"); // unreachable: chi-colorings exist
    std::map<int, ColorLabel> labels;
    for (int j = 0; j < static_cast<int>(first->classes.size()); ++j)
        for (int v : first->classes[j])
            labels[v] = "c" + std::to_string(j + 1);
    return labels;
}

} // namespace

OnlineInstance attach_predictions(const OnlineInstance& inst, const PredictionModel& model,
                                  std::uint64_t seed, const OracleLimits& limits) {
    switch (model.kind) {
    case PredictionModel::Kind::none:
        return make_instance(inst.graph, inst.order, std::nullopt);
    case PredictionModel::Kind::blockwise:
        return make_instance(inst.graph, inst.order, model.blocks);
    case PredictionModel::Kind::perfect:
        return make_instance(inst.graph, inst.order, perfect_labels(inst.graph, limits));
    case PredictionModel::Kind::corrupted: {
        auto labels = perfect_labels(inst.graph, limits);
        const int chi = chromatic_number(inst.graph, limits);
        SplitMix64 rng(seed);
        for (int v = 0; v < inst.graph.vertex_count(); ++v) {
            if (rng.next_unit() >= model.rate)
                continue;
            // Alternatives: the optimal palette plus one fresh label, minus
            // the vertex's current label.
            std::vector<ColorLabel> alternatives;
            for (int c = 1; c <= chi + 1; ++c) {
                ColorLabel candidate = "c" + std::to_string(c);
                if (candidate != labels[v])
                    alternatives.push_back(candidate);
            }
            labels[v] = alternatives[rng.next_below(static_cast<int>(alternatives.size()))];
        }
        return make_instance(inst.graph, inst.order, std::move(labels));
    }
    }
    throw Error("unknown prediction model");
}

} // namespace ocl
