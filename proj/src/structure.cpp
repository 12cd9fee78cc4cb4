#include "ocl/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ocl {

namespace {

[[noreturn]] void violation(const std::string& detail) {
    throw Error("structural violation: " + detail);
}

} // namespace

CliquePartition extract_clique_partition(const Graph& graph, const RunResult& run) {
    const int n = graph.vertex_count();
    if (static_cast<int>(run.per_step.size()) != n)
        throw ValidationError("run trace covers " + std::to_string(run.per_step.size()) +
                              " vertices, graph has " + std::to_string(n));
    const int x = run.distinct_colors;
    if (x < 2)
        throw ValidationError("clique extraction needs a run with x >= 2 colors, got x = " +
                              std::to_string(x));
    if (run.per_palette_counts.size() != 1)
        throw ValidationError("clique extraction needs a single-palette (FirstFit) run");

    std::vector<int> rank(n), pos(n);
    for (int t = 0; t < n; ++t) {
        const auto& [v, color] = run.per_step[t];
        pos[v] = t;
        rank[v] = color.rank;
    }

    // Witness of the top color: first vertex in reveal order with rank x-1.
    int top = -1;
    for (const auto& [v, color] : run.per_step)
        if (color.rank == x - 1) {
            top = v;
            break;
        }
    if (top == -1)
        violation("no vertex holds the top color");

    // One witness per smaller color: the earliest-revealed neighbor of the top
    // vertex holding that rank. FirstFit guarantees each rank was blocked.
    std::vector<int> witness(x, -1); // witness[i] = t_i
    witness[x - 1] = top;
    for (int u : graph.neighbors(top)) {
        if (pos[u] >= pos[top])
            continue;
        int r = rank[u];
        if (r < x - 1 && (witness[r] == -1 || pos[u] < pos[witness[r]]))
            witness[r] = u;
    }
    for (int i = 0; i < x - 1; ++i)
        if (witness[i] == -1)
            violation("top vertex has no earlier-revealed neighbor of rank " + std::to_string(i));

    std::vector<bool> in_s(n, false);
    for (int v : witness)
        in_s[v] = true;

    // V'_0: witnesses adjacent to every smaller-ranked witness.
    std::vector<int> base;
    std::vector<bool> in_base(x, false); // by witness index
    for (int i = 0; i < x; ++i) {
        bool complete = true;
        for (int j = 0; j < i && complete; ++j)
            complete = graph.adjacent(witness[j], witness[i]);
        if (complete) {
            base.push_back(witness[i]);
            in_base[i] = true;
        }
    }
    for (std::size_t a = 0; a < base.size(); ++a)
        for (std::size_t b = a + 1; b < base.size(); ++b)
            if (!graph.adjacent(base[a], base[b]))
                violation("V'_0 is not a clique");
    if (base.size() < 2)
        violation("V'_0 smaller than two");

    CliquePartition result;
    result.x = x;
    std::sort(base.begin(), base.end());
    result.cliques.push_back(base);

    std::map<int, std::size_t> claimed; // outside anchor vertex -> clique index
    for (int i = 0; i < x; ++i) {
        if (in_base[i])
            continue;
        const int u = witness[i]; // u_h, processed in increasing color order

        // alpha: the largest-ranked smaller witness not adjacent to u.
        int alpha_rank = -1;
        for (int j = i - 1; j >= 0; --j)
            if (!graph.adjacent(witness[j], u)) {
                alpha_rank = j;
                break;
            }
        if (alpha_rank == -1)
            violation("vertex outside V'_0 is adjacent to all smaller witnesses");

        // beta: earliest-revealed neighbor of u outside S holding alpha's rank.
        int beta = -1;
        for (int w : graph.neighbors(u))
            if (!in_s[w] && rank[w] == alpha_rank && (beta == -1 || pos[w] < pos[beta]))
                beta = w;
        if (beta == -1)
            violation("no outside neighbor of rank " + std::to_string(alpha_rank) +
                      " blocks witness of rank " + std::to_string(i));

        auto it = claimed.find(beta);
        if (it == claimed.end()) {
            claimed[beta] = result.cliques.size();
            result.cliques.push_back({beta, u});
        } else {
            auto& part = result.cliques[it->second];
            if (rank[u] <= rank[beta])
                violation("appended vertex does not exceed the anchor's color");
            for (int member : part)
                if (!graph.adjacent(member, u))
                    violation("appended vertex is not adjacent to clique member " +
                              std::to_string(member));
            part.push_back(u);
        }
    }

    for (auto& part : result.cliques)
        std::sort(part.begin(), part.end());
    result.q = static_cast<int>(result.cliques.size()) - 1;
    return result;
}

bool verify_partition(const Graph& graph, const CliquePartition& partition,
                      std::vector<std::string>* reasons) {
    std::vector<std::string> local;
    auto fail = [&](const std::string& reason) { local.push_back(reason); };

    if (partition.q != static_cast<int>(partition.cliques.size()) - 1)
        fail("q does not match the number of parts");
    if (partition.q < 0 || partition.q > partition.x - 2)
        fail("q out of range [0, x-2]");

    std::set<int> seen;
    int total = 0;
    for (const auto& part : partition.cliques) {
        if (part.size() < 2)
            fail("trivial part");
        total += static_cast<int>(part.size());
        for (int v : part) {
            if (v < 0 || v >= graph.vertex_count())
                fail("vertex out of range");
            else if (!seen.insert(v).second)
                fail("overlapping parts");
        }
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (!graph.adjacent(part[a], part[b]))
                    fail("not a clique");
    }
    if (total != partition.x + partition.q)
        fail("sizes sum to " + std::to_string(total) + ", want x+q = " +
             std::to_string(partition.x + partition.q));

    if (reasons)
        *reasons = local;
    return local.empty();
}

} // namespace ocl
