#include <ramseylab/subgraph.hpp>

#include <ramseylab/canon.hpp>

namespace ramseylab {

SubgraphMatcher::SubgraphMatcher(const Graph & pattern) : pattern_(pattern)
{
    full_ = make_plan({});

    std::vector<Edge> arcs;
    for (auto [a, b] : pattern_.edges()) {
        arcs.emplace_back(a, b);
        arcs.emplace_back(b, a);
    }
    auto canon = canonical_form(pattern_);
    auto rep = arc_orbit_representatives(arcs, canon.generators);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (rep[i] == i)
            anchored_.push_back(make_plan({arcs[i].first, arcs[i].second}));
}

SubgraphMatcher::Plan SubgraphMatcher::make_plan(std::vector<int> seed) const
{
    Plan plan;
    plan.fixed = static_cast<int>(seed.size());
    plan.order = std::move(seed);
    VertexSet placed = 0;
    for (int v : plan.order)
        placed |= singleton(v);
    while (static_cast<int>(plan.order.size()) < pattern_.order()) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (int v = 0; v < pattern_.order(); ++v) {
            if (contains(placed, v))
                continue;
            int links = set_size(pattern_.neighbours(v) & placed);
            int degree = pattern_.degree(v);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        plan.order.push_back(best);
        placed |= singleton(best);
    }
    VertexSet before = 0;
    for (int v : plan.order) {
        plan.earlier_neighbours.push_back(pattern_.neighbours(v) & before);
        before |= singleton(v);
    }
    return plan;
}

bool SubgraphMatcher::extend(const Plan & plan, std::size_t pos, std::span<const VertexSet> target,
                             std::span<const int> target_degree, VertexSet used, std::vector<int> & map) const
{
    if (pos == plan.order.size())
        return true;
    int p = plan.order[pos];
    VertexSet candidates = first_n(static_cast<int>(target.size())) & ~used;
    for_each_vertex(plan.earlier_neighbours[pos], [&](int q) { candidates &= target[map[q]]; });
    int need = pattern_.degree(p);
    while (candidates) {
        int x = lowest(candidates);
        candidates &= candidates - 1;
        if (target_degree[x] < need)
            continue;
        map[p] = x;
        if (extend(plan, pos + 1, target, target_degree, used | singleton(x), map))
            return true;
    }
    map[p] = -1;
    return false;
}

std::optional<std::vector<int>> SubgraphMatcher::find(std::span<const VertexSet> target) const
{
    if (pattern_.order() > static_cast<int>(target.size()))
        return std::nullopt;
    std::vector<int> degree(target.size());
    for (std::size_t x = 0; x < target.size(); ++x)
        degree[x] = set_size(target[x]);
    std::vector<int> map(pattern_.order(), -1);
    if (extend(full_, 0, target, degree, 0, map))
        return map;
    return std::nullopt;
}

std::optional<std::vector<int>> SubgraphMatcher::find_through(std::span<const VertexSet> target, int u, int v) const
{
    if (!contains(target[u], v))
        return std::nullopt;
    std::vector<int> degree(target.size());
    for (std::size_t x = 0; x < target.size(); ++x)
        degree[x] = set_size(target[x]);
    std::vector<int> map(pattern_.order(), -1);
    for (const Plan & plan : anchored_) {
        int a = plan.order[0];
        int b = plan.order[1];
        if (degree[u] < pattern_.degree(a) || degree[v] < pattern_.degree(b))
            continue;
        map.assign(pattern_.order(), -1);
        map[a] = u;
        map[b] = v;
        if (extend(plan, 2, target, degree, singleton(u) | singleton(v), map))
            return map;
    }
    return std::nullopt;
}

}
