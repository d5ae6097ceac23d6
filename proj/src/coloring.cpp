#include <ramseylab/coloring.hpp>

#include <ramseylab/graph6.hpp>

namespace ramseylab {

HostGraph::HostGraph(Kind kind, int clique_order, int pendant_degree)
    : kind_(kind), clique_order_(clique_order), pendant_degree_(pendant_degree)
{
    int order = clique_order + (kind == Kind::star_book ? 1 : 0);
    graph_ = Graph(order);
    for (int u = 0; u < clique_order; ++u)
        for (int v = u + 1; v < clique_order; ++v) {
            graph_.add_edge(u, v);
            edges_.emplace_back(u, v);
        }
    if (kind == Kind::star_book)
        for (int j = 0; j < pendant_degree; ++j) {
            graph_.add_edge(j, clique_order);
            edges_.emplace_back(j, clique_order);
        }
}

HostGraph HostGraph::complete(int order)
{
    if (order < 0 || order > max_graph_order)
        throw GraphError("complete host order out of range");
    return HostGraph(Kind::complete, order, 0);
}

HostGraph HostGraph::star_book(int clique_order, int pendant_degree)
{
    if (clique_order < 0 || clique_order + 1 > max_graph_order)
        throw GraphError("star-book clique order out of range");
    if (pendant_degree < 0 || pendant_degree > clique_order)
        throw GraphError("star-book pendant degree must be in 0..clique order");
    return HostGraph(Kind::star_book, clique_order, pendant_degree);
}

std::string HostGraph::describe() const
{
    std::string out = "K" + std::to_string(clique_order_);
    if (kind_ == Kind::star_book)
        out += "+S" + std::to_string(pendant_degree_);
    return out;
}

TwoColoring::TwoColoring(HostGraph host, Colour fill)
    : host_(std::move(host)), red_(host_.order(), 0), blue_(host_.order(), 0)
{
    auto & target = fill == Colour::red ? red_ : blue_;
    for (int v = 0; v < host_.order(); ++v)
        target[v] = host_.graph().neighbours(v);
}

std::optional<Colour> TwoColoring::colour(int u, int v) const
{
    if (contains(red_[u], v))
        return Colour::red;
    if (contains(blue_[u], v))
        return Colour::blue;
    return std::nullopt;
}

void TwoColoring::set(int u, int v, Colour c)
{
    if (!host_.has_edge(u, v))
        throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not a host edge");
    auto & on = c == Colour::red ? red_ : blue_;
    auto & off = c == Colour::red ? blue_ : red_;
    on[u] |= singleton(v);
    on[v] |= singleton(u);
    off[u] &= ~singleton(v);
    off[v] &= ~singleton(u);
}

Graph TwoColoring::graph(Colour c) const
{
    Graph g(host_.order());
    for (auto [u, v] : host_.edges())
        if (colour(u, v) == c)
            g.add_edge(u, v);
    return g;
}

std::string TwoColoring::colour_string() const
{
    std::string out;
    out.reserve(host_.edges().size());
    for (auto [u, v] : host_.edges())
        out.push_back(colour(u, v) == Colour::red ? 'R' : 'B');
    return out;
}

TwoColoring TwoColoring::from_string(HostGraph host, std::string_view colours)
{
    if (colours.size() != host.edges().size())
        throw FormatError("colour string has " + std::to_string(colours.size()) + " entries; host " +
                          host.describe() + " has " + std::to_string(host.edges().size()) + " edges");
    TwoColoring c(std::move(host));
    for (std::size_t i = 0; i < colours.size(); ++i) {
        auto [u, v] = c.host().edges()[i];
        if (colours[i] == 'R')
            c.set(u, v, Colour::red);
        else if (colours[i] == 'B')
            c.set(u, v, Colour::blue);
        else
            throw FormatError(std::string("colour string may only contain 'R' and 'B', found '") + colours[i] + "'");
    }
    return c;
}

TwoColoring TwoColoring::restricted_to_clique() const
{
    TwoColoring out(HostGraph::complete(host_.clique_order()));
    for (auto [u, v] : out.host().edges())
        out.set(u, v, *colour(u, v));
    return out;
}

TwoColoring TwoColoring::from_red_graph(const Graph & red)
{
    TwoColoring out(HostGraph::complete(red.order()), Colour::blue);
    for (auto [u, v] : red.edges())
        out.set(u, v, Colour::red);
    return out;
}

nlohmann::json host_to_json(const HostGraph & host)
{
    if (host.kind() == HostGraph::Kind::complete)
        return {{"kind", "complete"}, {"order", host.order()}};
    return {{"kind", "star_book"}, {"clique_order", host.clique_order()}, {"pendant_degree", host.pendant_degree()}};
}

HostGraph host_from_json(const nlohmann::json & j)
{
    try {
        auto kind = j.at("kind").get<std::string>();
        if (kind == "complete")
            return HostGraph::complete(j.at("order").get<int>());
        if (kind == "star_book")
            return HostGraph::star_book(j.at("clique_order").get<int>(), j.at("pendant_degree").get<int>());
        throw FormatError("unknown host kind '" + kind + "'");
    }
    catch (const nlohmann::json::exception & e) {
        throw FormatError(std::string("malformed host descriptor: ") + e.what());
    }
}

nlohmann::json to_json(const TwoColoring & c)
{
    return {{"host", host_to_json(c.host())},
            {"edge_order", "lexicographic (i<j), pendant edges last"},
            {"colors", c.colour_string()}};
}

TwoColoring coloring_from_json(const nlohmann::json & j)
{
    try {
        return TwoColoring::from_string(host_from_json(j.at("host")), j.at("colors").get<std::string>());
    }
    catch (const nlohmann::json::exception & e) {
        throw FormatError(std::string("malformed colouring: ") + e.what());
    }
}

}
