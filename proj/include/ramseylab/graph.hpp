#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramseylab {

/// A set of vertices of a graph with at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int max_graph_order = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

/// Vertices 0..n-1.
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1u; }

/// Calls fn(v) for each member of s in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn && fn)
{
    while (s) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

std::vector<int> members(VertexSet s);

class GraphError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..order-1, stored as one adjacency
/// bit row per vertex.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return static_cast<int>(rows_.size()); }
    VertexSet vertices() const { return first_n(order()); }

    bool adjacent(int u, int v) const { return contains(rows_[u], v); }
    VertexSet neighbours(int v) const { return rows_[v]; }
    std::span<const VertexSet> rows() const { return rows_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return set_size(rows_[v]); }
    int edge_count() const;
    int min_degree() const;

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;
    Graph without_edge(int u, int v) const;

    /// Subgraph induced on the members of s, relabelled 0.. in increasing order.
    Graph induced(VertexSet s) const;

    /// Relabels so that vertex v becomes perm[v].
    Graph relabelled(std::span<const int> perm) const;

    /// Number of connected components restricted to the vertex set s.
    std::vector<VertexSet> components(VertexSet s) const;
    std::vector<VertexSet> components() const { return components(vertices()); }

    bool operator==(const Graph &) const = default;
    auto operator<=>(const Graph &) const = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> rows_;
};

/// A generalized fan K_1 + nK_t: a centre joined to n disjoint t-cliques.
struct FanSpec
{
    int n = 1;
    int t = 2;

    int order() const { return n * t + 1; }
    bool operator==(const FanSpec &) const = default;
};

Graph empty_graph(int order);
Graph complete(int k);
Graph cycle(int k);
Graph path(int k);

/// Complete multipartite graph with the given part sizes, parts labelled
/// consecutively.
Graph complete_multipartite(std::span<const int> part_sizes);

/// Vertices of g first, then vertices of h shifted by g.order().
Graph join(const Graph & g, const Graph & h);

/// n copies of h, copy i occupying vertices i*|h| .. (i+1)*|h|-1.
Graph disjoint_union(int n, const Graph & h);

/// Centre is vertex 0, blade i occupies 1 + i*t .. (i+1)*t.
Graph fan(FanSpec spec);

/// Parses names such as "K5", "C7", "P4", "E3" (edgeless), "W5" (wheel C5+K1),
/// "K3,3" (complete bipartite), "Petersen".
Graph named_graph(const std::string & name);

}
