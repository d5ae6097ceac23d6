#pragma once

#include <ramseylab/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace ramseylab {

/// Result of canonical labelling by partition refinement with individualisation.
struct CanonicalForm
{
    /// The graph relabelled canonically: isomorphic inputs give equal graphs.
    Graph graph;
    /// label[v] is the canonical position of input vertex v.
    std::vector<int> label;
    /// orbit[v] is the least vertex in v's automorphism orbit.
    std::vector<int> orbit;
    /// Generators of the automorphism group, as maps v -> g(v).
    std::vector<std::vector<int>> generators;
    /// Leaves of the search tree that were visited.
    std::uint64_t leaves = 0;
};

/// `colours`, when given, is a vertex colouring that automorphisms must
/// preserve; canonical forms are then comparable only between inputs with the
/// same colour multiset.
CanonicalForm canonical_form(const Graph & g, std::span<const int> colours = {});

bool isomorphic(const Graph & a, const Graph & b);

/// Orbits of the group generated by `generators` acting on pairs (u, v):
/// returns, for each input arc, the index of the least arc in its orbit.
std::vector<std::size_t> arc_orbit_representatives(std::span<const Edge> arcs,
                                                   std::span<const std::vector<int>> generators);

}
