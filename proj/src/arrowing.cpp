#include <ramseylab/arrowing.hpp>

#include <ramseylab/kernels.hpp>
#include <ramseylab/subgraph.hpp>

#include <algorithm>
#include <unordered_set>

namespace ramseylab {

std::string to_string(Witness::Kind kind)
{
    switch (kind) {
    case Witness::Kind::neither:
        return "neither";
    case Witness::Kind::red_embedding:
        return "red_embedding";
    case Witness::Kind::blue_fan:
        return "blue_fan";
    case Witness::Kind::blue_embedding:
        return "blue_embedding";
    }
    return "unknown";
}

namespace {

struct StateHash
{
    std::size_t operator()(const std::pair<VertexSet, int> & s) const
    {
        return std::hash<VertexSet>{}(s.first * 0x9e3779b97f4a7c15ULL + static_cast<VertexSet>(s.second));
    }
};

VertexSet above(int v) { return v >= 63 ? 0 : ~first_n(v + 1); }

/// Packs `need` disjoint t-cliques into `avail`. A failed (avail, need) state
/// fails again wherever it recurs, so failures are memoised.
class BladePacker
{
public:
    BladePacker(std::span<const VertexSet> rows, int t) : rows_(rows), t_(t) {}

    bool pack(VertexSet avail, int need, std::vector<std::vector<int>> & blades)
    {
        if (need == 0)
            return true;
        if (set_size(avail) < need * t_)
            return false;
        if (failed_.contains({avail, need}))
            return false;
        VertexSet minima = avail;
        while (minima) {
            int m = lowest(minima);
            minima &= minima - 1;
            VertexSet rest = avail & above(m);
            if (set_size(rest) + 1 < need * t_)
                break;
            std::vector<int> blade{m};
            if (cliques(rest & rows_[m], t_ - 1, blade, [&](const std::vector<int> & clique) {
                    VertexSet used = 0;
                    for (int x : clique)
                        used |= singleton(x);
                    blades.push_back(clique);
                    if (pack(rest & ~used, need - 1, blades))
                        return true;
                    blades.pop_back();
                    return false;
                }))
                return true;
        }
        failed_.insert({avail, need});
        return false;
    }

private:
    /// Extends `clique` by `more` vertices from `candidates` in increasing
    /// order; stops when `done` returns true.
    template <typename Done>
    bool cliques(VertexSet candidates, int more, std::vector<int> & clique, Done && done)
    {
        if (more == 0)
            return done(clique);
        while (set_size(candidates) >= more) {
            int x = lowest(candidates);
            candidates &= candidates - 1;
            clique.push_back(x);
            if (cliques(candidates & rows_[x], more - 1, clique, done))
                return true;
            clique.pop_back();
        }
        return false;
    }

    std::span<const VertexSet> rows_;
    int t_;
    std::unordered_set<std::pair<VertexSet, int>, StateHash> failed_;
};

}

std::optional<FanWitness> find_fan(std::span<const VertexSet> rows, FanSpec spec, VertexSet centres)
{
    if (spec.n < 1 || spec.t < 1)
        throw GraphError("fan needs n >= 1 and t >= 1");
    centres &= first_n(static_cast<int>(rows.size()));
    int need = spec.n * spec.t;
    while (centres) {
        int c = lowest(centres);
        centres &= centres - 1;
        if (set_size(rows[c]) < need)
            continue;
        BladePacker packer(rows, spec.t);
        FanWitness w;
        w.centre = c;
        if (packer.pack(rows[c], spec.n, w.blades))
            return w;
    }
    return std::nullopt;
}

Witness contains_red(const TwoColoring & c, const Graph & g)
{
    Witness w;
    if (g.order() > c.host().order())
        return w;
    if (auto map = SubgraphMatcher(g).find(c.rows(Colour::red))) {
        w.kind = Witness::Kind::red_embedding;
        w.map = std::move(*map);
    }
    return w;
}

Witness contains_blue_fan(const TwoColoring & c, FanSpec spec)
{
    Witness w;
    if (auto f = find_fan(c.rows(Colour::blue), spec, c.host().graph().vertices())) {
        w.kind = Witness::Kind::blue_fan;
        w.centre = f->centre;
        w.blades = std::move(f->blades);
    }
    return w;
}

Witness contains_blue_subgraph(const TwoColoring & c, const Graph & h)
{
    if (h.order() > max_blue_pattern_order)
        throw PatternTooLarge("blue pattern has " + std::to_string(h.order()) + " vertices; limit is " +
                              std::to_string(max_blue_pattern_order));
    Witness w;
    if (h.order() > c.host().order())
        return w;
    if (auto map = SubgraphMatcher(h).find(c.rows(Colour::blue))) {
        w.kind = Witness::Kind::blue_embedding;
        w.map = std::move(*map);
    }
    return w;
}

namespace {

bool embedding_valid(const TwoColoring & c, const std::vector<int> & map, const Graph & pattern, Colour colour)
{
    if (static_cast<int>(map.size()) != pattern.order())
        return false;
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int x : map)
        if (x < 0 || x >= c.host().order())
            return false;
    for (auto [a, b] : pattern.edges())
        if (c.colour(map[a], map[b]) != colour)
            return false;
    return true;
}

}

bool witness_valid(const TwoColoring & c, const Witness & w, const Graph * pattern, const FanSpec * spec)
{
    switch (w.kind) {
    case Witness::Kind::neither:
        return true;
    case Witness::Kind::red_embedding:
        return pattern && embedding_valid(c, w.map, *pattern, Colour::red);
    case Witness::Kind::blue_embedding:
        return pattern && embedding_valid(c, w.map, *pattern, Colour::blue);
    case Witness::Kind::blue_fan: {
        if (!spec || static_cast<int>(w.blades.size()) != spec->n)
            return false;
        std::vector<int> all{w.centre};
        for (auto & blade : w.blades) {
            if (static_cast<int>(blade.size()) != spec->t)
                return false;
            all.insert(all.end(), blade.begin(), blade.end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end() || all.front() < 0 ||
            all.back() >= c.host().order())
            return false;
        for (auto & blade : w.blades)
            for (std::size_t i = 0; i < blade.size(); ++i) {
                if (c.colour(w.centre, blade[i]) != Colour::blue)
                    return false;
                for (std::size_t j = i + 1; j < blade.size(); ++j)
                    if (c.colour(blade[i], blade[j]) != Colour::blue)
                        return false;
            }
        return true;
    }
    }
    return false;
}

DegreeBoundReport blue_degree_bound_check(const TwoColoring & c, const Graph & g, FanSpec spec, int ramsey_g_kt)
{
    if (contains_red(c, g).found())
        throw PremiseError("colouring contains a red copy of G");
    if (contains_blue_fan(c, spec).found())
        throw PremiseError("colouring contains a blue generalised fan");
    DegreeBoundReport report;
    report.bound = (spec.n - 1) * spec.t + ramsey_g_kt - 1;
    auto blue = c.rows(Colour::blue);
    std::vector<std::uint32_t> degree(blue.size());
    kernels::masked_degrees(blue, c.host().graph().vertices(), degree);
    for (std::size_t v = 0; v < degree.size(); ++v) {
        int d = static_cast<int>(degree[v]);
        report.blue_degree.push_back(d);
        report.max_blue_degree = std::max(report.max_blue_degree, d);
        if (d > report.bound)
            report.violations.push_back(static_cast<int>(v));
    }
    return report;
}

nlohmann::json to_json(const Witness & w)
{
    nlohmann::json j{{"kind", to_string(w.kind)}};
    if (w.kind == Witness::Kind::red_embedding || w.kind == Witness::Kind::blue_embedding)
        j["map"] = w.map;
    if (w.kind == Witness::Kind::blue_fan) {
        j["centre"] = w.centre;
        j["blades"] = w.blades;
    }
    return j;
}

}
