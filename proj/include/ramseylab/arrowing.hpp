#pragma once

#include <ramseylab/coloring.hpp>
#include <ramseylab/graph.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramseylab {

/// Outcome of a containment check on a colouring.
struct Witness
{
    enum class Kind
    {
        neither,
        red_embedding,
        blue_fan,
        blue_embedding,
    };

    Kind kind = Kind::neither;
    /// Embeddings: map[pattern vertex] = host vertex.
    std::vector<int> map;
    /// Blue fans: the centre and n disjoint blades of t vertices each.
    int centre = -1;
    std::vector<std::vector<int>> blades;

    bool found() const { return kind != Kind::neither; }
};

std::string to_string(Witness::Kind kind);

struct FanWitness
{
    int centre = -1;
    std::vector<std::vector<int>> blades;
};

/// Generalised fan search on bit rows: a centre from `centres` whose
/// neighbourhood holds n disjoint t-cliques. Centres are tried in increasing
/// order; blades are packed in least-vertex-first order with increasing minima.
std::optional<FanWitness> find_fan(std::span<const VertexSet> rows, FanSpec spec, VertexSet centres);

Witness contains_red(const TwoColoring & c, const Graph & g);
Witness contains_blue_fan(const TwoColoring & c, FanSpec spec);

class PatternTooLarge : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int max_blue_pattern_order = 12;

Witness contains_blue_subgraph(const TwoColoring & c, const Graph & h);

/// Direct edge-by-edge re-validation of a witness against a colouring.
/// `pattern` is G for red embeddings and H for blue embeddings; fans are
/// checked against `spec`.
bool witness_valid(const TwoColoring & c, const Witness & w, const Graph * pattern, const FanSpec * spec);

class PremiseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct DegreeBoundReport
{
    /// Largest blue degree allowed: (n-1)t + R(G, K_t) - 1.
    int bound = 0;
    int max_blue_degree = 0;
    std::vector<int> blue_degree;
    std::vector<int> violations;

    bool holds() const { return violations.empty(); }
};

/// For a colouring with neither red G nor blue K_1+nK_t, every vertex has blue
/// degree below R(G, nK_t) <= (n-1)t + R(G, K_t). Throws PremiseError if the
/// colouring contains either target.
DegreeBoundReport blue_degree_bound_check(const TwoColoring & c, const Graph & g, FanSpec spec, int ramsey_g_kt);

nlohmann::json to_json(const Witness & w);

}
