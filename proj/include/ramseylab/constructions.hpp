#pragma once

#include <ramseylab/coloring.hpp>
#include <ramseylab/graph.hpp>

#include <span>
#include <vector>

namespace ramseylab {

/// Lower-bound colouring for R(G, H) >= (chi-1)(h-1) + s: chi-1 blue cliques of
/// order h-1 and one of order s-1 (listed last), red between classes, on
/// K_{(chi-1)(h-1)+s-1}. Requires chi >= 2, s >= 1, h >= s.
TwoColoring burr_coloring(int chi, int s, int h);

/// burr_coloring(k+1, 1, nt+1): k blue K_{nt}, red complete k-partite.
TwoColoring ramsey_witness_fan(int k, int t, int n);

/// Colouring of K_{knt} plus a pendant vertex v0 of degree (k-1)nt + t - 1.
/// Classes V_1..V_k of nt consecutive vertices are blue cliques with red
/// between them; v0 is red to V_1..V_{k-1} and blue to the t-1 least vertices
/// of V_k. With classes labelled consecutively these are exactly the pendant
/// neighbours 0..(k-1)nt+t-2 of the star-book host.
TwoColoring star_witness_fan(int k, int t, int n);

/// Throws std::logic_error if `c` contains a red g or a blue fan(spec). The fan
/// witnesses run this on themselves with G = K_{k+1} in builds without NDEBUG.
void check_lower_bound_witness(const TwoColoring & c, const Graph & g, FanSpec spec);

/// Vertex classes of the constructions, in construction order.
std::vector<VertexSet> burr_classes(int chi, int s, int h);
std::vector<VertexSet> star_witness_classes(int k, int t, int n);

}
