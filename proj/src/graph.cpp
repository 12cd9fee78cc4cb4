#include "ocl/graph.hpp"

#include <algorithm>
#include <set>

namespace ocl {

std::string to_string(const Color& color) {
    return color.palette + "#" + std::to_string(color.rank);
}

Color parse_color(const std::string& text) {
    auto pos = text.rfind('#');
    if (pos == std::string::npos || pos == 0 || pos + 1 == text.size())
        throw ValidationError("invalid color token '" + text + "' (want <palette>#<rank>)");
    Color c;
    c.palette = text.substr(0, pos);
    try {
        c.rank = std::stoi(text.substr(pos + 1));
    } catch (const std::exception&) {
        throw ValidationError("invalid color rank in '" + text + "'");
    }
    if (c.rank < 0)
        throw ValidationError("negative color rank in '" + text + "'");
    return c;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0)
        throw ValidationError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> canonical;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw ValidationError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        canonical.emplace(std::min(u, v), std::max(u, v));
    }
    g.edges_.assign(canonical.begin(), canonical.end());
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

OnlineInstance make_instance(Graph graph, std::vector<int> order,
                             std::optional<std::map<int, ColorLabel>> predictions) {
    const int n = graph.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw ValidationError("order has " + std::to_string(order.size()) + " entries, want " +
                              std::to_string(n));
    std::vector<int> position(n, -1);
    for (int t = 0; t < n; ++t) {
        int v = order[t];
        if (v < 0 || v >= n || position[v] != -1)
            throw ValidationError("order is not a permutation of 0.." + std::to_string(n - 1));
        position[v] = t;
    }
    if (predictions) {
        if (static_cast<int>(predictions->size()) != n)
            throw ValidationError("predictions must cover every vertex exactly once");
        for (const auto& [v, label] : *predictions) {
            if (v < 0 || v >= n)
                throw ValidationError("prediction for unknown vertex " + std::to_string(v));
            if (label.empty())
                throw ValidationError("empty prediction label for vertex " + std::to_string(v));
        }
    }
    OnlineInstance inst;
    inst.graph = std::move(graph);
    inst.order = std::move(order);
    inst.position = std::move(position);
    inst.predictions = std::move(predictions);
    return inst;
}

SuffixInstance suffix_instance(const OnlineInstance& inst, int i) {
    const int n = inst.graph.vertex_count();
    if (i < 1 || i > n)
        throw ValidationError("suffix position " + std::to_string(i) + " out of range [1," +
                              std::to_string(n) + "]");
    const int m = n - i + 1;
    std::vector<int> original_ids(m);
    std::vector<int> new_id(n, -1);
    for (int t = 0; t < m; ++t) {
        int v = inst.order[i - 1 + t];
        original_ids[t] = v;
        new_id[v] = t;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : inst.graph.edges())
        if (new_id[u] != -1 && new_id[v] != -1)
            edges.emplace_back(new_id[u], new_id[v]);
    std::optional<std::map<int, ColorLabel>> predictions;
    if (inst.predictions) {
        predictions.emplace();
        for (int t = 0; t < m; ++t)
            (*predictions)[t] = inst.predictions->at(original_ids[t]);
    }
    std::vector<int> order(m);
    for (int t = 0; t < m; ++t)
        order[t] = t; // relabeled in suffix order, so the suffix permutation is the identity
    SuffixInstance result;
    result.instance = make_instance(build_graph(m, edges), std::move(order), std::move(predictions));
    result.original_ids = std::move(original_ids);
    return result;
}

bool is_proper(const Graph& graph, const Coloring& coloring) {
    if (static_cast<int>(coloring.size()) != graph.vertex_count())
        throw ValidationError("coloring covers " + std::to_string(coloring.size()) +
                              " vertices, want " + std::to_string(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (!coloring[v])
            throw ValidationError("vertex " + std::to_string(v) + " is uncolored");
    for (const auto& [u, v] : graph.edges())
        if (*coloring[u] == *coloring[v])
            return false;
    return true;
}

bool is_proper_partial(const Graph& graph, const Coloring& coloring) {
    for (const auto& [u, v] : graph.edges())
        if (u < static_cast<int>(coloring.size()) && v < static_cast<int>(coloring.size()) &&
            coloring[u] && coloring[v] && *coloring[u] == *coloring[v])
            return false;
    return true;
}

} // namespace ocl
