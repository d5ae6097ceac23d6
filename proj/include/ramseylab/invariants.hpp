#pragma once

#include <ramseylab/graph.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ramseylab {

class SizeLimitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Partition of V(G) into independent colour classes.
struct ProperColoring
{
    std::vector<VertexSet> classes;

    int size() const { return static_cast<int>(classes.size()); }
    int class_of(int v) const;
    /// Classes disjoint, non-empty, independent, and covering V(g).
    bool valid_for(const Graph & g) const;
    /// Sorts classes by least vertex.
    void normalise();
};

struct InvariantLimits
{
    int max_order = 24;
};

struct ChromaticResult
{
    int chi = 0;
    ProperColoring witness;
};

struct ClassSizeResult
{
    int s = 0;
    ProperColoring witness;
};

struct TauResult
{
    int tau = 0;
    /// Proper chi-colouring whose last class has size s(G).
    ProperColoring witness;
    /// Vertex of the last class and index of the class realising the minimum.
    int vertex = -1;
    int class_index = -1;
};

struct CriticalWitness
{
    /// Last class is the singleton {singleton_vertex}.
    ProperColoring coloring;
    Edge edge;
    int singleton_vertex = -1;
    int low_class = -1;

    /// Checks the structural invariants against g: proper colouring, singleton
    /// last class, exactly one edge from it into low_class, and chi(g - edge)
    /// one less than the number of classes.
    bool check(const Graph & g) const;
};

int clique_number(const Graph & g);

/// A proper colouring with at most k classes, or nothing.
std::optional<ProperColoring> colour_with(const Graph & g, int k);

/// Lexicographically least colour vector (vertex 0 first, colours introduced
/// in order) using at most k colours, as classes ordered by colour.
std::optional<ProperColoring> lex_least_colouring(const Graph & g, int k);

/// Visits every proper colouring with exactly k non-empty classes once, as a
/// partition (classes ordered by least vertex). The visitor returns false to
/// stop the enumeration.
void for_each_partition_colouring(const Graph & g, int k,
                                  const std::function<bool(const std::vector<VertexSet> &)> & visit);

ChromaticResult chromatic_number(const Graph & g, InvariantLimits limits = {});
ClassSizeResult s_of(const Graph & g, InvariantLimits limits = {});
TauResult tau_of(const Graph & g, InvariantLimits limits = {});

/// Least edge (lexicographic) whose deletion lowers chi by one.
std::optional<Edge> critical_edge(const Graph & g, InvariantLimits limits = {});
bool is_edge_critical(const Graph & g, InvariantLimits limits = {});

CriticalWitness critical_coloring(const Graph & g, InvariantLimits limits = {});

}
