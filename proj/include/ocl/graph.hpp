#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocl/errors.hpp"

namespace ocl {

/// Opaque color token from the countable universe. Equality is exact token
/// equality; the only syntactic restriction is that palette tags never
/// contain '#' (reserved by the "<palette>#<rank>" serialization).
using ColorLabel = std::string;

/// A concrete color: a palette tag plus a rank within that palette.
/// Colors from distinct palettes are unequal by construction, which is what
/// keeps palette-separated algorithms proper without bookkeeping.
struct Color {
    ColorLabel palette;
    int rank = 0;

    auto operator<=>(const Color&) const = default;
};

/// "<palette>#<rank>", e.g. "c1#0".
std::string to_string(const Color& color);

/// Inverse of to_string. Splits on the last '#'.
Color parse_color(const std::string& text);

/// Partial or total vertex coloring, indexed by vertex id.
using Coloring = std::vector<std::optional<Color>>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// adjacency lists are sorted, edges stored canonically as (u,v) with u < v.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    /// Canonical edge list: sorted pairs with u < v, no duplicates.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    friend Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Validates and constructs a graph. Duplicate edges collapse; self-loops and
/// out-of-range endpoints raise ValidationError naming the offending pair.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

/// Online graph: the graph plus the reveal permutation, plus an optional
/// prediction map covering every vertex. Immutable after construction.
struct OnlineInstance {
    Graph graph;
    std::vector<int> order;    // order[t] = vertex revealed at step t
    std::vector<int> position; // position[v] = step at which v is revealed
    std::optional<std::map<int, ColorLabel>> predictions;
};

/// Validates the permutation and prediction domain and fills the inverse
/// position array.
OnlineInstance make_instance(Graph graph, std::vector<int> order,
                             std::optional<std::map<int, ColorLabel>> predictions = std::nullopt);

/// Instance induced by a suffix of the reveal order, with vertices relabeled
/// to 0..m-1 in suffix order so algorithms cannot see original positions.
struct SuffixInstance {
    OnlineInstance instance;
    std::vector<int> original_ids; // new id -> id in the parent instance
};

/// The online subgraph induced by the vertices at positions i..n (1-based i).
SuffixInstance suffix_instance(const OnlineInstance& inst, int i);

/// True iff every edge has distinct endpoint colors. Requires a total
/// coloring; raises ValidationError identifying any uncolored vertex.
bool is_proper(const Graph& graph, const Coloring& coloring);

/// Properness over colored endpoints only; uncolored vertices are ignored.
bool is_proper_partial(const Graph& graph, const Coloring& coloring);

} // namespace ocl
