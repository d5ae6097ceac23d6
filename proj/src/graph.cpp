#include <ramseylab/graph.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ramseylab {

std::vector<int> members(VertexSet s)
{
    std::vector<int> out;
    out.reserve(set_size(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int order)
{
    if (order < 0 || order > max_graph_order)
        throw GraphError("graph order must be in 0.." + std::to_string(max_graph_order));
    rows_.assign(order, 0);
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= order())
        throw GraphError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loops are not allowed");
    rows_[u] |= singleton(v);
    rows_[v] |= singleton(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~singleton(v);
    rows_[v] &= ~singleton(u);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto r : rows_)
        twice += set_size(r);
    return twice / 2;
}

int Graph::min_degree() const
{
    int best = order() == 0 ? 0 : order();
    for (auto r : rows_)
        best = std::min(best, set_size(r));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for_each_vertex(rows_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph Graph::complement() const
{
    Graph g(order());
    for (int v = 0; v < order(); ++v)
        g.rows_[v] = ~rows_[v] & vertices() & ~singleton(v);
    return g;
}

Graph Graph::without_edge(int u, int v) const
{
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::induced(VertexSet s) const
{
    auto vs = members(s & vertices());
    Graph g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::relabelled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != order())
        throw GraphError("permutation length does not match graph order");
    Graph g(order());
    for (auto [u, v] : edges())
        g.add_edge(perm[u], perm[v]);
    return g;
}

std::vector<VertexSet> Graph::components(VertexSet s) const
{
    std::vector<VertexSet> out;
    VertexSet left = s & vertices();
    while (left) {
        VertexSet comp = singleton(lowest(left));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= rows_[v]; });
            next &= left & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

Graph empty_graph(int order) { return Graph(order); }

Graph complete(int k)
{
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle(int k)
{
    if (k < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    Graph g(k);
    for (int v = 0; v < k; ++v)
        g.add_edge(v, (v + 1) % k);
    return g;
}

Graph path(int k)
{
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph complete_multipartite(std::span<const int> part_sizes)
{
    int total = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    Graph g(total);
    std::vector<int> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (part_of[u] != part_of[v])
                g.add_edge(u, v);
    return g;
}

Graph join(const Graph & g, const Graph & h)
{
    int shift = g.order();
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(u + shift, v + shift);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, v + shift);
    return out;
}

Graph disjoint_union(int n, const Graph & h)
{
    if (n < 0)
        throw GraphError("negative copy count");
    Graph out(n * h.order());
    for (int c = 0; c < n; ++c)
        for (auto [u, v] : h.edges())
            out.add_edge(u + c * h.order(), v + c * h.order());
    return out;
}

Graph fan(FanSpec spec)
{
    if (spec.n < 1 || spec.t < 1)
        throw GraphError("fan needs n >= 1 and t >= 1");
    return join(complete(1), disjoint_union(spec.n, complete(spec.t)));
}

namespace {

int parse_count(const std::string & s, const std::string & whole)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw GraphError("cannot parse graph name '" + whole + "'");
    return std::stoi(s);
}

}

Graph named_graph(const std::string & name)
{
    if (name == "Petersen") {
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }
    if (name.size() < 2)
        throw GraphError("cannot parse graph name '" + name + "'");
    std::string rest = name.substr(1);
    switch (name[0]) {
    case 'K': {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            return complete(parse_count(rest, name));
        std::vector<int> parts;
        std::size_t start = 0;
        while (true) {
            auto end = rest.find(',', start);
            parts.push_back(parse_count(rest.substr(start, end - start), name));
            if (end == std::string::npos)
                break;
            start = end + 1;
        }
        return complete_multipartite(parts);
    }
    case 'C':
        return cycle(parse_count(rest, name));
    case 'P':
        return path(parse_count(rest, name));
    case 'E':
        return empty_graph(parse_count(rest, name));
    case 'W':
        return join(complete(1), cycle(parse_count(rest, name)));
    default:
        throw GraphError("cannot parse graph name '" + name + "'");
    }
}

}
