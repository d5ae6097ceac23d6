#pragma once

#include <ramseylab/coloring.hpp>
#include <ramseylab/graph.hpp>
#include <ramseylab/graph6.hpp>

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing {

inline std::vector<ramseylab::Graph> corpus()
{
    std::ifstream in(std::string(RAMSEYLAB_TEST_DATA) + "/graphs_upto7.g6");
    if (!in)
        throw std::runtime_error("missing graph corpus");
    return ramseylab::read_graphs(in);
}

inline ramseylab::Graph random_graph(std::mt19937_64 & rng, int order, double p = 0.5)
{
    std::bernoulli_distribution edge(p);
    ramseylab::Graph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (edge(rng))
                g.add_edge(u, v);
    return g;
}

inline ramseylab::TwoColoring random_coloring(std::mt19937_64 & rng, const ramseylab::HostGraph & host,
                                              double p_red = 0.5)
{
    std::bernoulli_distribution red(p_red);
    ramseylab::TwoColoring c(host);
    for (auto [u, v] : host.edges())
        c.set(u, v, red(rng) ? ramseylab::Colour::red : ramseylab::Colour::blue);
    return c;
}

}
