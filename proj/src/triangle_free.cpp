#include <ramseylab/triangle_free.hpp>

#include <ramseylab/canon.hpp>
#include <ramseylab/invariants.hpp>

#include <set>

namespace ramseylab {

EnumerationStats & EnumerationStats::operator+=(const EnumerationStats & o)
{
    candidates += o.candidates;
    degree_rejections += o.degree_rejections;
    canonical_rejections += o.canonical_rejections;
    duplicate_rejections += o.duplicate_rejections;
    filter_rejections += o.filter_rejections;
    return *this;
}

namespace {

template <typename Fn>
void for_each_independent_set(const Graph & g, VertexSet chosen, VertexSet allowed, Fn && fn)
{
    fn(chosen);
    while (allowed) {
        int v = lowest(allowed);
        allowed &= allowed - 1;
        for_each_independent_set(g, chosen | singleton(v), allowed & ~g.neighbours(v), fn);
    }
}

}

std::vector<Graph> triangle_free_children(const Graph & parent, EnumerationStats * stats,
                                          const HereditaryFilter & filter)
{
    EnumerationStats local;
    std::vector<Graph> out;
    std::set<Graph> seen;
    int m = parent.order();
    if (m + 1 > max_graph_order)
        throw SizeLimitError("graph too large to augment");

    for_each_independent_set(parent, 0, parent.vertices(), [&](VertexSet s) {
        ++local.candidates;
        int new_degree = set_size(s);
        // Minimum degree of the child over the old vertices.
        int min_old = max_graph_order;
        for (int v = 0; v < m; ++v)
            min_old = std::min(min_old, parent.degree(v) + (contains(s, v) ? 1 : 0));
        if (new_degree > min_old) {
            ++local.degree_rejections;
            return;
        }
        Graph child(m + 1);
        for (auto [u, v] : parent.edges())
            child.add_edge(u, v);
        for_each_vertex(s, [&](int v) { child.add_edge(v, m); });

        auto canon = canonical_form(child);
        int min_degree = child.min_degree();
        int deletion = -1;
        for (int v = 0; v <= m; ++v)
            if (child.degree(v) == min_degree && (deletion < 0 || canon.label[v] > canon.label[deletion]))
                deletion = v;
        if (canon.orbit[deletion] != canon.orbit[m]) {
            ++local.canonical_rejections;
            return;
        }
        if (!seen.insert(canon.graph).second) {
            ++local.duplicate_rejections;
            return;
        }
        if (filter && !filter(canon.graph)) {
            ++local.filter_rejections;
            return;
        }
        out.push_back(std::move(canon.graph));
    });
    if (stats)
        *stats += local;
    return out;
}

std::vector<Graph> triangle_free_graphs(int order, EnumerationStats * stats, const HereditaryFilter & filter)
{
    if (order < 0 || order > max_triangle_free_order)
        throw SizeLimitError("triangle-free enumeration supports orders 0.." +
                             std::to_string(max_triangle_free_order));
    std::vector<Graph> level{Graph(0)};
    if (filter && !filter(level.front()))
        return {};
    for (int m = 0; m < order; ++m) {
        std::vector<Graph> next;
        for (const Graph & parent : level) {
            auto children = triangle_free_children(parent, stats, filter);
            next.insert(next.end(), std::make_move_iterator(children.begin()), std::make_move_iterator(children.end()));
        }
        level = std::move(next);
    }
    return level;
}

void for_each_triangle_free(int order, const std::function<bool(const Graph &)> & visit)
{
    if (order < 0 || order > max_triangle_free_order)
        throw SizeLimitError("triangle-free enumeration supports orders 0.." +
                             std::to_string(max_triangle_free_order));
    if (order == 0) {
        visit(Graph(0));
        return;
    }
    for (const Graph & parent : triangle_free_graphs(order - 1))
        for (const Graph & child : triangle_free_children(parent))
            if (!visit(child))
                return;
}

}
