#include "ocl/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace ocl {

OracleLimits OracleLimits::from_env() {
    OracleLimits limits;
    if (const char* raw = std::getenv("OCL_ORACLE_LIMIT")) {
        int value = std::atoi(raw);
        if (value > 0) {
            limits.chromatic_n = value;
            limits.enumeration_n = value;
        }
    }
    return limits;
}

namespace {

void check_limit(int n, int limit, const char* what) {
    if (n > limit)
        throw OracleLimitError(std::string("oracle size limit: ") + what + " needs n <= " +
                               std::to_string(limit) + ", got n = " + std::to_string(n));
}

// Is the graph properly colorable with exactly k colors available?
// Vertices are processed in descending-degree order; a vertex may open a new
// color only if it is the lowest-numbered unused one (symmetry breaking).
bool k_colorable(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0)
        return true;
    if (k <= 0)
        return false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> color(n, -1);

    std::function<bool(int, int)> recurse = [&](int depth, int used) -> bool {
        if (depth == n)
            return true;
        int v = order[depth];
        bool forbidden[64] = {};
        for (int u : g.neighbors(v))
            if (color[u] >= 0)
                forbidden[color[u]] = true;
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (forbidden[c])
                continue;
            color[v] = c;
            if (recurse(depth + 1, std::max(used, c + 1)))
                return true;
            color[v] = -1;
        }
        return false;
    };
    return recurse(0, 0);
}

int greedy_coloring_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v = 0; v < n; ++v) {
        std::set<int> taken;
        for (int u : g.neighbors(v))
            if (color[u] >= 0)
                taken.insert(color[u]);
        int c = 0;
        while (taken.count(c))
            ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> clique;
    std::vector<int> candidates(n);
    std::iota(candidates.begin(), candidates.end(), 0);
    while (!candidates.empty()) {
        int best = candidates[0];
        for (int v : candidates)
            if (g.degree(v) > g.degree(best))
                best = v;
        clique.push_back(best);
        std::vector<int> narrowed;
        for (int v : candidates)
            if (v != best && g.adjacent(v, best))
                narrowed.push_back(v);
        candidates = std::move(narrowed);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

int chromatic_number(const Graph& g, const OracleLimits& limits) {
    check_limit(g.vertex_count(), limits.chromatic_n, "chromatic_number");
    if (g.vertex_count() == 0)
        return 0;
    int lower = static_cast<int>(greedy_clique(g).size());
    int upper = greedy_coloring_count(g);
    for (int k = lower; k < upper; ++k)
        if (k_colorable(g, k))
            return k;
    return upper;
}

OptimalPartitionEnumerator::OptimalPartitionEnumerator(const Graph& graph,
                                                       const OracleLimits& limits)
    : graph_(graph) {
    check_limit(graph.vertex_count(), limits.enumeration_n, "partition enumeration");
    chi_ = chromatic_number(graph, limits);
    const int n = graph.vertex_count();
    cls_.assign(n, -1);
    try_next_.assign(n + 1, 0);
    class_size_.assign(chi_, 0);
}

std::optional<OptimalPartition> OptimalPartitionEnumerator::next() {
    if (exhausted_)
        return std::nullopt;
    const int n = graph_.vertex_count();

    // Resume the depth-first walk over restricted-growth assignments. After a
    // complete assignment is emitted, depth_ == n and the next call backtracks.
    while (true) {
        if (depth_ == n) {
            if (n == 0) {
                exhausted_ = true;
                if (chi_ == 0) {
                    return OptimalPartition{};
                }
                return std::nullopt;
            }
            if (used_ == chi_) {
                OptimalPartition part;
                part.classes.assign(chi_, {});
                for (int v = 0; v < n; ++v)
                    part.classes[cls_[v]].push_back(v);
                // Back off one level so the walk continues from here.
                --depth_;
                int v = depth_;
                if (--class_size_[cls_[v]] == 0)
                    --used_;
                cls_[v] = -1;
                return part;
            }
            --depth_;
            int v = depth_;
            if (--class_size_[cls_[v]] == 0)
                --used_;
            cls_[v] = -1;
            continue;
        }

        const int v = depth_;
        // Even giving every remaining vertex a new class must reach chi_.
        bool advanced = false;
        if (used_ + (n - depth_) >= chi_) {
            bool blocked[64] = {};
            for (int u : graph_.neighbors(v))
                if (u < v && cls_[u] >= 0)
                    blocked[cls_[u]] = true;
            int ceiling = std::min(used_ + 1, chi_); // classes 0..used_ (new class = used_)
            for (int c = try_next_[v]; c < ceiling; ++c) {
                if (blocked[c])
                    continue;
                cls_[v] = c;
                ++class_size_[c];
                if (c == used_)
                    ++used_;
                try_next_[v] = c + 1;
                ++depth_;
                try_next_[depth_] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            try_next_[v] = 0;
            if (depth_ == 0) {
                exhausted_ = true;
                return std::nullopt;
            }
            --depth_;
            int w = depth_;
            if (--class_size_[cls_[w]] == 0)
                --used_;
            cls_[w] = -1;
        }
    }
}

namespace {

// Labels "f0", "f1", ... skipping anything that appears in the predictions.
std::vector<ColorLabel> fresh_labels(int count, const std::set<ColorLabel>& taken) {
    std::vector<ColorLabel> result;
    for (int i = 0; static_cast<int>(result.size()) < count; ++i) {
        ColorLabel candidate = "f" + std::to_string(i);
        if (!taken.count(candidate))
            result.push_back(candidate);
    }
    return result;
}

struct AssignmentSearch {
    // agreement[j][l] = vertices of class j predicted label l
    std::vector<std::vector<int>> agreement;
    int num_labels = 0;
    int best_total = -1;
    std::vector<int> best_choice;   // class -> label index, or -1 for fresh
    std::vector<int> choice;
    std::vector<bool> label_used;

    // Per class: any unused predicted label with positive agreement, or a
    // fresh label at agreement zero. Assigning an unused zero-agreement
    // predicted label never beats a fresh one, so skipping those is lossless.
    void recurse(int j, int total) {
        const int classes = static_cast<int>(agreement.size());
        if (j == classes) {
            if (total > best_total) {
                best_total = total;
                best_choice = choice;
            }
            return;
        }
        for (int l = 0; l < num_labels; ++l) {
            if (label_used[l] || agreement[j][l] == 0)
                continue;
            label_used[l] = true;
            choice[j] = l;
            recurse(j + 1, total + agreement[j][l]);
            label_used[l] = false;
        }
        choice[j] = -1; // fresh label
        recurse(j + 1, total);
    }
};

} // namespace

EtaResult prediction_error(const OnlineInstance& inst, const OracleLimits& limits) {
    if (!inst.predictions)
        throw ValidationError("prediction_error requires an instance with predictions");
    const int n = inst.graph.vertex_count();
    check_limit(n, limits.enumeration_n, "prediction_error");

    std::vector<ColorLabel> labels;
    std::set<ColorLabel> label_set;
    for (const auto& [v, label] : *inst.predictions)
        label_set.insert(label);
    labels.assign(label_set.begin(), label_set.end());
    std::map<ColorLabel, int> label_index;
    for (int l = 0; l < static_cast<int>(labels.size()); ++l)
        label_index[labels[l]] = l;

    OptimalPartitionEnumerator enumerator(inst.graph, limits);
    const int chi = enumerator.chromatic();
    if (chi > limits.assignment_chi)
        throw OracleLimitError("oracle size limit: assignment search needs chi <= " +
                               std::to_string(limits.assignment_chi) + ", got chi = " +
                               std::to_string(chi));

    EtaResult best;
    best.eta = n + 1;
    while (auto part = enumerator.next()) {
        AssignmentSearch search;
        search.num_labels = static_cast<int>(labels.size());
        search.agreement.assign(chi, std::vector<int>(search.num_labels, 0));
        for (int j = 0; j < chi; ++j)
            for (int v : part->classes[j]) {
                auto it = label_index.find(inst.predictions->at(v));
                if (it != label_index.end())
                    ++search.agreement[j][it->second];
            }
        search.choice.assign(chi, -1);
        search.label_used.assign(search.num_labels, false);
        search.recurse(0, 0);

        int eta = n - search.best_total;
        if (eta < best.eta) {
            best.eta = eta;
            best.witness_partition = *part;
            best.witness_assignment.clear();
            auto fresh = fresh_labels(chi, label_set);
            int fresh_at = 0;
            for (int j = 0; j < chi; ++j)
                best.witness_assignment.push_back(
                    search.best_choice[j] >= 0 ? labels[search.best_choice[j]]
                                               : fresh[fresh_at++]);
            if (best.eta == 0)
                break;
        }
    }
    if (best.eta == n + 1)
        best.eta = 0; // n == 0: the empty coloring matches trivially
    return best;
}

} // namespace ocl
