#include "ocl/colorers.hpp"

#include <algorithm>
#include <set>

namespace ocl {

namespace {

// Lowest rank r such that (palette, r) is held by no revealed neighbor.
// Scans all neighbors; colors from other palettes can never match, so this
// equals the per-palette scan.
int lowest_free_rank(const ColorLabel& palette, std::span<const RevealedNeighbor> neighbors) {
    std::set<int> taken;
    for (const auto& nb : neighbors)
        if (nb.color.palette == palette)
            taken.insert(nb.color.rank);
    int rank = 0;
    while (taken.count(rank))
        ++rank;
    return rank;
}

class FirstFit final : public OnlineColorer {
public:
    Color step(const StepView& view) override {
        return Color{kFirstFitPalette, lowest_free_rank(kFirstFitPalette, view.neighbors)};
    }
};

class FirstFitPredictions final : public OnlineColorer {
public:
    Color step(const StepView& view) override {
        if (view.prediction == nullptr || !view.prediction->has_value())
            throw ValidationError("missing prediction for vertex " + std::to_string(view.vertex));
        const ColorLabel& palette = **view.prediction;
        return Color{palette, lowest_free_rank(palette, view.neighbors)};
    }
};

class Scripted final : public OnlineColorer {
public:
    explicit Scripted(std::vector<Color> script) : script_(std::move(script)) {}

    Color step(const StepView& view) override {
        if (next_ >= script_.size())
            throw ValidationError("script exhausted at vertex " + std::to_string(view.vertex) +
                                  " (script length " + std::to_string(script_.size()) + ")");
        return script_[next_++];
    }

private:
    std::vector<Color> script_;
    std::size_t next_ = 0;
};

} // namespace

ColorerFactory first_fit() {
    return [] { return std::make_unique<FirstFit>(); };
}

ColorerFactory first_fit_predictions() {
    return [] { return std::make_unique<FirstFitPredictions>(); };
}

ColorerFactory scripted_colorer(std::vector<Color> script) {
    return [script] { return std::make_unique<Scripted>(script); };
}

RunResult run(const ColorerFactory& make_colorer, const OnlineInstance& inst) {
    auto colorer = make_colorer();
    const int n = inst.graph.vertex_count();
    RunResult result;
    result.coloring.assign(n, std::nullopt);
    result.per_step.reserve(n);

    std::optional<ColorLabel> prediction;
    std::vector<RevealedNeighbor> revealed;
    std::set<Color> distinct;
    std::map<ColorLabel, std::set<int>> palette_ranks;

    for (int t = 0; t < n; ++t) {
        const int v = inst.order[t];
        revealed.clear();
        for (int u : inst.graph.neighbors(v))
            if (inst.position[u] < t)
                revealed.push_back({u, *result.coloring[u]});
        const std::optional<ColorLabel>* pred_ptr = nullptr;
        if (inst.predictions) {
            prediction = inst.predictions->at(v);
            pred_ptr = &prediction;
        }
        Color c = colorer->step(StepView{v, revealed, pred_ptr});
        for (const auto& nb : revealed)
            if (nb.color == c)
                throw ImproperStepError("improper step: vertex " + std::to_string(v) +
                                            " colored " + to_string(c) +
                                            " equal to revealed neighbor " +
                                            std::to_string(nb.vertex),
                                        v, nb.vertex);
        result.coloring[v] = c;
        result.per_step.emplace_back(v, c);
        distinct.insert(c);
        palette_ranks[c.palette].insert(c.rank);
    }
    result.distinct_colors = static_cast<int>(distinct.size());
    for (const auto& [palette, ranks] : palette_ranks)
        result.per_palette_counts[palette] = static_cast<int>(ranks.size());
    return result;
}

} // namespace ocl
