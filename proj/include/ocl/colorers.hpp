#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ocl/graph.hpp"

namespace ocl {

/// A revealed neighbor of the current vertex, with the color it holds.
struct RevealedNeighbor {
    int vertex;
    Color color;
};

/// What a colorer is allowed to see at one step: the arriving vertex, its
/// already-revealed neighbors with their colors, and the prediction if the
/// instance carries one. The driver builds this view; colorers never touch
/// the instance directly, so the online information restriction is enforced
/// structurally rather than by convention.
struct StepView {
    int vertex;
    std::span<const RevealedNeighbor> neighbors;
    const std::optional<ColorLabel>* prediction; // null when instance has no predictions
};

/// Stateful online colorer. Deterministic, irrevocable: step() is called once
/// per vertex in reveal order and the returned color is final.
class OnlineColorer {
public:
    virtual ~OnlineColorer() = default;
    virtual Color step(const StepView& view) = 0;
};

/// Colorers are produced fresh per run; no state crosses instances.
using ColorerFactory = std::function<std::unique_ptr<OnlineColorer>()>;

/// Greedy colorer on the single reserved palette "ff": lowest rank not held
/// by any revealed neighbor.
ColorerFactory first_fit();

/// Reserved palette tag used by first_fit.
inline const ColorLabel kFirstFitPalette = "ff";

/// Prediction-following colorer: vertex predicted label c gets the lowest
/// rank in palette c not held by any revealed neighbor. One palette per
/// distinct predicted label; palettes are disjoint by construction.
ColorerFactory first_fit_predictions();

/// Replays a fixed color sequence; used to instantiate adversarial
/// algorithms in tests. Throws when the script runs out.
ColorerFactory scripted_colorer(std::vector<Color> script);

/// Outcome of one online run.
struct RunResult {
    Coloring coloring;                          // total, proper
    int distinct_colors = 0;                    // x(G) resp. chi_A(G, pi)
    std::vector<std::pair<int, Color>> per_step; // reveal-order trace
    std::map<ColorLabel, int> per_palette_counts; // distinct colors per palette
};

/// Reveals vertices in permutation order, passes each step only the revealed
/// prefix, checks properness after every step (ImproperStepError on
/// violation), and records the trace.
RunResult run(const ColorerFactory& make_colorer, const OnlineInstance& inst);

} // namespace ocl
