#include "ocl/combine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ocl {

CombineResult combine(const std::vector<ColorerFactory>& colorers, const OnlineInstance& inst,
                      std::vector<std::string> prefixes) {
    const int t = static_cast<int>(colorers.size());
    if (t < 1)
        throw ValidationError("combine needs at least one colorer");
    if (prefixes.empty()) {
        for (int j = 0; j < t; ++j)
            prefixes.push_back("A" + std::to_string(j + 1) + "/");
    }
    if (static_cast<int>(prefixes.size()) != t)
        throw ValidationError("combine got " + std::to_string(prefixes.size()) +
                              " palette prefixes for " + std::to_string(t) + " colorers");

    const int n = inst.graph.vertex_count();

    struct Sub {
        std::unique_ptr<OnlineColorer> colorer;
        Coloring coloring;       // the sub-simulation's own raw colors
        std::set<Color> colors;  // distinct raw colors so far
    };
    std::vector<Sub> subs(t);
    for (int j = 0; j < t; ++j) {
        subs[j].colorer = colorers[j]();
        subs[j].coloring.assign(n, std::nullopt);
    }

    CombineResult out;
    out.result.coloring.assign(n, std::nullopt);
    out.result.per_step.reserve(n);
    out.chosen.reserve(n);

    std::optional<ColorLabel> prediction;
    std::vector<RevealedNeighbor> revealed;
    std::set<Color> emitted_distinct;
    std::map<Color, int> emitted_by; // emitted color -> sub index (disjointness check)
    std::map<ColorLabel, std::set<int>> palette_ranks;

    for (int step = 0; step < n; ++step) {
        const int v = inst.order[step];
        const std::optional<ColorLabel>* pred_ptr = nullptr;
        if (inst.predictions) {
            prediction = inst.predictions->at(v);
            pred_ptr = &prediction;
        }

        // Advance every sub-simulation on its own coloring.
        std::vector<Color> raw(t);
        for (int j = 0; j < t; ++j) {
            revealed.clear();
            for (int u : inst.graph.neighbors(v))
                if (inst.position[u] < step)
                    revealed.push_back({u, *subs[j].coloring[u]});
            raw[j] = subs[j].colorer->step(StepView{v, revealed, pred_ptr});
            for (const auto& nb : revealed)
                if (nb.color == raw[j])
                    throw ImproperStepError("sub-algorithm " + std::to_string(j + 1) +
                                                ": improper step: vertex " + std::to_string(v) +
                                                " colored " + to_string(raw[j]) +
                                                " equal to revealed neighbor " +
                                                std::to_string(nb.vertex),
                                            v, nb.vertex);
            subs[j].coloring[v] = raw[j];
            subs[j].colors.insert(raw[j]);
        }

        // Follow the sub-algorithm with the fewest simulated colors so far,
        // current vertex included; ties go to the lowest index.
        int best = 0;
        for (int j = 1; j < t; ++j)
            if (subs[j].colors.size() < subs[best].colors.size())
                best = j;
        Color emitted{prefixes[best] + raw[best].palette, raw[best].rank};

        auto [it, inserted] = emitted_by.emplace(emitted, best);
        if (!inserted && it->second != best)
            throw Error("palette disjointness violated: " + to_string(emitted) +
                        " emitted by sub-algorithms " + std::to_string(it->second + 1) + " and " +
                        std::to_string(best + 1));
        for (int u : inst.graph.neighbors(v))
            if (inst.position[u] < step && *out.result.coloring[u] == emitted)
                throw ImproperStepError("combined coloring improper at vertex " +
                                            std::to_string(v),
                                        v, u);

        out.result.coloring[v] = emitted;
        out.result.per_step.emplace_back(v, emitted);
        out.chosen.push_back(best);
        emitted_distinct.insert(emitted);
        palette_ranks[emitted.palette].insert(emitted.rank);
    }

    out.result.distinct_colors = static_cast<int>(emitted_distinct.size());
    for (const auto& [palette, ranks] : palette_ranks)
        out.result.per_palette_counts[palette] = static_cast<int>(ranks.size());
    for (int j = 0; j < t; ++j)
        out.sub_distinct.push_back(static_cast<int>(subs[j].colors.size()));
    return out;
}

namespace {

// Fresh palette namespace for the suffix combination: "A<j>/" works unless
// some predicted label happens to start that way, in which case slashes are
// appended until no label starts with either prefix.
std::vector<std::string> suffix_prefixes(const std::map<int, ColorLabel>& predictions) {
    for (int extra = 0;; ++extra) {
        std::string pad(extra, '/');
        std::vector<std::string> prefixes{"A1/" + pad, "A2/" + pad};
        bool clash = false;
        for (const auto& [v, label] : predictions)
            for (const auto& prefix : prefixes)
                if (label.compare(0, prefix.size(), prefix) == 0)
                    clash = true;
        if (!clash)
            return prefixes;
    }
}

} // namespace

APrimeResult a_prime(int k, const ColorerFactory& classical, const OnlineInstance& inst) {
    if (!inst.predictions)
        throw ValidationError("a_prime requires an instance with predictions");
    if (k < 1)
        throw ValidationError("a_prime requires k >= 1");

    const int n = inst.graph.vertex_count();
    APrimeResult out;
    out.result.coloring.assign(n, std::nullopt);

    std::set<ColorLabel> labels_seen;
    int switch_step = -1; // 0-based step whose vertex triggers phase 2
    for (int step = 0; step < n; ++step) {
        const int v = inst.order[step];
        const ColorLabel& label = inst.predictions->at(v);
        labels_seen.insert(label);
        bool conflict = false;
        for (int u : inst.graph.neighbors(v))
            if (inst.position[u] < step && inst.predictions->at(u) == label)
                conflict = true;
        if (static_cast<int>(labels_seen.size()) > k || conflict) {
            switch_step = step;
            break;
        }
        out.result.coloring[v] = Color{label, 0};
        out.result.per_step.emplace_back(v, Color{label, 0});
    }

    if (switch_step >= 0) {
        out.switch_position = switch_step + 1;
        SuffixInstance suffix = suffix_instance(inst, switch_step + 1);
        auto prefixes = suffix_prefixes(*inst.predictions);
        CombineResult phase2 = combine({first_fit_predictions(), classical}, suffix.instance,
                                       std::move(prefixes));
        out.phase2_chosen = phase2.chosen;
        for (const auto& [sv, color] : phase2.result.per_step) {
            int original = suffix.original_ids[sv];
            out.result.coloring[original] = color;
            out.result.per_step.emplace_back(original, color);
        }
    }

    std::set<Color> distinct;
    std::map<ColorLabel, std::set<int>> palette_ranks;
    for (const auto& [v, color] : out.result.per_step) {
        distinct.insert(color);
        palette_ranks[color.palette].insert(color.rank);
    }
    out.result.distinct_colors = static_cast<int>(distinct.size());
    for (const auto& [palette, ranks] : palette_ranks)
        out.result.per_palette_counts[palette] = static_cast<int>(ranks.size());

    if (!is_proper(inst.graph, out.result.coloring))
        throw Error("a_prime produced an improper coloring");
    return out;
}

} // namespace ocl
