#pragma once

// Test-only independent oracles. Everything here is plain exhaustive search
// with no pruning, symmetry breaking, or shared code with the library
// implementations it cross-checks.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ocl/graph.hpp"
#include "ocl/oracle.hpp"

namespace bf {

inline bool assignment_proper(const ocl::Graph& g, const std::vector<int>& color) {
    for (const auto& [u, v] : g.edges())
        if (color[u] == color[v])
            return false;
    return true;
}

// Tries every one of the k^n color assignments.
inline bool k_colorable(const ocl::Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0)
        return true;
    if (k == 0)
        return false;
    std::vector<int> color(n, 0);
    while (true) {
        if (assignment_proper(g, color))
            return true;
        int i = 0;
        while (i < n && ++color[i] == k) {
            color[i] = 0;
            ++i;
        }
        if (i == n)
            return false;
    }
}

inline int chromatic(const ocl::Graph& g) {
    int k = 0;
    while (!k_colorable(g, k))
        ++k;
    return k;
}

// Canonical form of a labeling: classes ordered by smallest member.
inline std::vector<std::vector<int>> canonical_partition(const std::vector<int>& color, int k) {
    std::vector<std::vector<int>> classes(k);
    for (int v = 0; v < static_cast<int>(color.size()); ++v)
        classes[color[v]].push_back(v);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const auto& c) { return c.empty(); }),
                  classes.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

// Every partition of V into exactly chi independent classes, deduplicated
// over label permutations by brute force over all chi^n labelings.
inline std::set<std::vector<std::vector<int>>> optimal_partitions(const ocl::Graph& g) {
    const int chi = chromatic(g);
    const int n = g.vertex_count();
    std::set<std::vector<std::vector<int>>> found;
    if (n == 0) {
        found.insert({});
        return found;
    }
    std::vector<int> color(n, 0);
    while (true) {
        if (assignment_proper(g, color)) {
            auto classes = canonical_partition(color, chi);
            if (static_cast<int>(classes.size()) == chi)
                found.insert(classes);
        }
        int i = 0;
        while (i < n && ++color[i] == chi) {
            color[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
    return found;
}

// Best agreement for one partition by enumerating every injective assignment
// of classes to the candidate labels (all distinct predicted labels plus one
// fresh label per class).
inline int best_agreement_all_assignments(const std::vector<std::vector<int>>& classes,
                                          const std::map<int, ocl::ColorLabel>& predictions) {
    std::set<ocl::ColorLabel> label_set;
    for (const auto& [v, label] : predictions)
        label_set.insert(label);
    std::vector<ocl::ColorLabel> candidates(label_set.begin(), label_set.end());
    for (std::size_t j = 0; j < classes.size(); ++j)
        candidates.push_back("\x01fresh" + std::to_string(j)); // never matches a prediction

    const int k = static_cast<int>(classes.size());
    const int m = static_cast<int>(candidates.size());
    std::vector<bool> used(m, false);
    std::vector<int> pick(k, -1);
    int best = -1;

    std::function<void(int)> walk = [&](int j) {
        if (j == k) {
            int agreement = 0;
            for (int jj = 0; jj < k; ++jj)
                for (int v : classes[jj])
                    if (predictions.at(v) == candidates[pick[jj]])
                        ++agreement;
            best = std::max(best, agreement);
            return;
        }
        for (int c = 0; c < m; ++c) {
            if (used[c])
                continue;
            used[c] = true;
            pick[j] = c;
            walk(j + 1);
            used[c] = false;
        }
    };
    walk(0);
    return best;
}

// Prediction error by full enumeration on both levels: independent partition
// stream (labeling odometer) and unrestricted injective assignment search.
inline int eta(const ocl::OnlineInstance& inst) {
    const int n = inst.graph.vertex_count();
    int best = n;
    for (const auto& classes : optimal_partitions(inst.graph))
        best = std::min(best,
                        n - best_agreement_all_assignments(classes, *inst.predictions));
    return best;
}

// Largest clique by include/exclude recursion.
inline int max_clique(const ocl::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> current;
    int best = 0;
    std::function<void(int)> walk = [&](int v) {
        best = std::max(best, static_cast<int>(current.size()));
        if (v == n)
            return;
        if (static_cast<int>(current.size()) + (n - v) <= best)
            return;
        bool fits = true;
        for (int u : current)
            if (!g.adjacent(u, v))
                fits = false;
        if (fits) {
            current.push_back(v);
            walk(v + 1);
            current.pop_back();
        }
        walk(v + 1);
    };
    walk(0);
    return best;
}

} // namespace bf
