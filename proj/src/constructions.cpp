#include <ramseylab/constructions.hpp>

#include <ramseylab/arrowing.hpp>

#include <stdexcept>
#include <string>

namespace ramseylab {

namespace {

std::vector<VertexSet> consecutive_classes(const std::vector<int> & sizes)
{
    std::vector<VertexSet> out;
    int start = 0;
    for (int size : sizes) {
        out.push_back(first_n(start + size) & ~first_n(start));
        start += size;
    }
    return out;
}

void colour_by_classes(TwoColoring & c, const std::vector<VertexSet> & classes)
{
    for (auto [u, v] : c.host().edges()) {
        if (u >= c.host().clique_order() || v >= c.host().clique_order())
            continue;
        bool same = false;
        for (VertexSet cls : classes)
            same = same || (contains(cls, u) && contains(cls, v));
        c.set(u, v, same ? Colour::blue : Colour::red);
    }
}

void require(bool ok, const std::string & what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

}

std::vector<VertexSet> burr_classes(int chi, int s, int h)
{
    require(chi >= 2, "burr colouring needs chi >= 2");
    require(s >= 1, "burr colouring needs s >= 1");
    require(h >= s, "burr colouring needs h >= s");
    std::vector<int> sizes(chi - 1, h - 1);
    if (s > 1)
        sizes.push_back(s - 1);
    require((chi - 1) * (h - 1) + s - 1 <= max_graph_order, "burr colouring host too large");
    return consecutive_classes(sizes);
}

TwoColoring burr_coloring(int chi, int s, int h)
{
    auto classes = burr_classes(chi, s, h);
    TwoColoring c(HostGraph::complete((chi - 1) * (h - 1) + s - 1));
    colour_by_classes(c, classes);
    return c;
}

TwoColoring ramsey_witness_fan(int k, int t, int n)
{
    require(k >= 2 && t >= 2 && n >= 1, "fan witness needs k >= 2, t >= 2, n >= 1");
    auto c = burr_coloring(k + 1, 1, n * t + 1);
#ifndef NDEBUG
    check_lower_bound_witness(c, complete(k + 1), FanSpec{n, t});
#endif
    return c;
}

std::vector<VertexSet> star_witness_classes(int k, int t, int n)
{
    require(k >= 2 && t >= 2 && n >= 1, "star witness needs k >= 2, t >= 2, n >= 1");
    require(k * n * t + 1 <= max_graph_order, "star witness host too large");
    return consecutive_classes(std::vector<int>(k, n * t));
}

TwoColoring star_witness_fan(int k, int t, int n)
{
    auto classes = star_witness_classes(k, t, n);
    int clique = k * n * t;
    int red_part = (k - 1) * n * t;
    TwoColoring c(HostGraph::star_book(clique, red_part + t - 1));
    colour_by_classes(c, classes);
    int v0 = c.host().pendant_vertex();
    for (int j = 0; j < red_part; ++j)
        c.set(j, v0, Colour::red);
    for (int j = red_part; j < red_part + t - 1; ++j)
        c.set(j, v0, Colour::blue);
#ifndef NDEBUG
    check_lower_bound_witness(c, complete(k + 1), FanSpec{n, t});
#endif
    return c;
}

void check_lower_bound_witness(const TwoColoring & c, const Graph & g, FanSpec spec)
{
    if (contains_red(c, g).found())
        throw std::logic_error("witness colouring contains a red " + std::to_string(g.order()) + "-vertex target");
    if (contains_blue_fan(c, spec).found())
        throw std::logic_error("witness colouring contains a blue fan");
}

}
