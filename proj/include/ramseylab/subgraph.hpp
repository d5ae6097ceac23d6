#pragma once

#include <ramseylab/graph.hpp>

#include <optional>
#include <span>
#include <vector>

namespace ramseylab {

/// Non-induced subgraph search of a fixed pattern in bit-row targets.
///
/// Pattern vertices are matched by descending degree, preferring vertices
/// adjacent to those already placed; target candidates are tried in increasing
/// order. The first embedding found is returned, so results are deterministic.
/// An embedding is returned as map[pattern vertex] = target vertex.
class SubgraphMatcher
{
public:
    explicit SubgraphMatcher(const Graph & pattern);

    const Graph & pattern() const { return pattern_; }

    std::optional<std::vector<int>> find(std::span<const VertexSet> target) const;

    /// Embeddings that use the target edge uv as the image of a pattern edge.
    /// Pattern arcs equivalent under the pattern's automorphisms are tried once.
    std::optional<std::vector<int>> find_through(std::span<const VertexSet> target, int u, int v) const;

private:
    struct Plan
    {
        std::vector<int> order;
        /// For each position, pattern vertices placed earlier that are adjacent.
        std::vector<VertexSet> earlier_neighbours;
        int fixed = 0;
    };

    Plan make_plan(std::vector<int> seed) const;
    bool extend(const Plan & plan, std::size_t pos, std::span<const VertexSet> target,
                std::span<const int> target_degree, VertexSet used, std::vector<int> & map) const;

    Graph pattern_;
    Plan full_;
    std::vector<Plan> anchored_;
};

}
