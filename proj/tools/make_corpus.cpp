// Writes every graph of order 0..max (default 7) up to isomorphism, one
// graph6 string per line, grouped by order and sorted within each order.
#include <ramseylab/canon.hpp>
#include <ramseylab/graph6.hpp>

#include <iostream>
#include <set>
#include <string>

using namespace ramseylab;

int main(int argc, char ** argv)
{
    int max_order = argc > 1 ? std::stoi(argv[1]) : 7;
    std::set<Graph> level{Graph(0)};
    for (int n = 0; n <= max_order; ++n) {
        std::set<std::string> lines;
        for (auto & g : level)
            lines.insert(emit_graph6(g));
        for (auto & l : lines)
            std::cout << l << '\n';
        std::set<Graph> next;
        for (auto & g : level)
            for (VertexSet nb = 0; nb < (VertexSet{1} << n); ++nb) {
                Graph h(n + 1);
                for (auto [u, v] : g.edges())
                    h.add_edge(u, v);
                for_each_vertex(nb, [&](int v) { h.add_edge(v, n); });
                next.insert(canonical_form(h).graph);
            }
        level = std::move(next);
    }
}
