#include <ramseylab/invariants.hpp>

#include <algorithm>

namespace ramseylab {

int ProperColoring::class_of(int v) const
{
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (contains(classes[i], v))
            return static_cast<int>(i);
    return -1;
}

bool ProperColoring::valid_for(const Graph & g) const
{
    VertexSet seen = 0;
    for (VertexSet c : classes) {
        if (c == 0 || (c & seen) || (c & ~g.vertices()))
            return false;
        bool independent = true;
        for_each_vertex(c, [&](int v) { independent = independent && !(g.neighbours(v) & c); });
        if (!independent)
            return false;
        seen |= c;
    }
    return seen == g.vertices();
}

void ProperColoring::normalise()
{
    std::sort(classes.begin(), classes.end(), [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
}

namespace {

void check_limits(const Graph & g, const InvariantLimits & limits)
{
    if (g.order() > limits.max_order)
        throw SizeLimitError("graph has " + std::to_string(g.order()) + " vertices; limit is " +
                             std::to_string(limits.max_order));
}

void grow_clique(const Graph & g, int size, VertexSet candidates, int & best)
{
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    while (candidates) {
        if (size + set_size(candidates) <= best)
            return;
        int v = lowest(candidates);
        candidates &= ~singleton(v);
        grow_clique(g, size + 1, candidates & g.neighbours(v), best);
    }
}

class Dsatur
{
public:
    Dsatur(const Graph & g, int k) : g_(g), k_(k), colour_(g.order(), -1), classes_(k, 0) {}

    std::optional<ProperColoring> run()
    {
        if (k_ <= 0)
            return g_.order() == 0 ? std::optional<ProperColoring>(ProperColoring{}) : std::nullopt;
        if (!extend(0, 0))
            return std::nullopt;
        ProperColoring out;
        for (VertexSet c : classes_)
            if (c)
                out.classes.push_back(c);
        out.normalise();
        return out;
    }

private:
    int pick(int used) const
    {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] >= 0)
                continue;
            int sat = 0;
            for (int c = 0; c < used; ++c)
                sat += (classes_[c] & g_.neighbours(v)) ? 1 : 0;
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool extend(int coloured, int used)
    {
        if (coloured == g_.order())
            return true;
        int v = pick(used);
        int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (classes_[c] & g_.neighbours(v))
                continue;
            classes_[c] |= singleton(v);
            colour_[v] = c;
            if (extend(coloured + 1, std::max(used, c + 1)))
                return true;
            classes_[c] &= ~singleton(v);
            colour_[v] = -1;
        }
        return false;
    }

    const Graph & g_;
    int k_;
    std::vector<int> colour_;
    std::vector<VertexSet> classes_;
};

/// Sequential partition enumeration: vertex v joins an existing class or opens
/// the next one. `prune` sees the classes in use and the next vertex.
class PartitionWalk
{
public:
    using Visit = std::function<bool(const std::vector<VertexSet> &)>;
    using Prune = std::function<bool(const std::vector<VertexSet> &, int)>;

    PartitionWalk(const Graph & g, int k, Visit visit, Prune prune = {})
        : g_(g), k_(k), visit_(std::move(visit)), prune_(std::move(prune))
    {
        classes_.reserve(k);
    }

    void run()
    {
        if (k_ < 0 || (g_.order() == 0 && k_ != 0))
            return;
        step(0);
    }

private:
    bool step(int v)
    {
        int used = static_cast<int>(classes_.size());
        if (g_.order() - v < k_ - used)
            return true;
        if (prune_ && prune_(classes_, v))
            return true;
        if (v == g_.order())
            return visit_(classes_);
        for (int c = 0; c < used; ++c) {
            if (classes_[c] & g_.neighbours(v))
                continue;
            classes_[c] |= singleton(v);
            bool go_on = step(v + 1);
            classes_[c] &= ~singleton(v);
            if (!go_on)
                return false;
        }
        if (used < k_) {
            classes_.push_back(singleton(v));
            bool go_on = step(v + 1);
            classes_.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    }

    const Graph & g_;
    int k_;
    Visit visit_;
    Prune prune_;
    std::vector<VertexSet> classes_;
};

int min_class_size(const std::vector<VertexSet> & classes)
{
    int best = max_graph_order + 1;
    for (VertexSet c : classes)
        best = std::min(best, set_size(c));
    return best;
}

}

int clique_number(const Graph & g)
{
    int best = 0;
    grow_clique(g, 0, g.vertices(), best);
    return best;
}

std::optional<ProperColoring> colour_with(const Graph & g, int k)
{
    return Dsatur(g, k).run();
}

std::optional<ProperColoring> lex_least_colouring(const Graph & g, int k)
{
    // The first partition visited by the sequential walk is the lexicographically
    // least colour vector for its class count; keep the least over all counts.
    std::optional<ProperColoring> found;
    std::vector<int> best_vector;
    for (int classes = (g.order() == 0 ? 0 : 1); classes <= k; ++classes) {
        PartitionWalk walk(g, classes, [&](const std::vector<VertexSet> & cls) {
            std::vector<int> vec(g.order());
            for (std::size_t c = 0; c < cls.size(); ++c)
                for_each_vertex(cls[c], [&](int v) { vec[v] = static_cast<int>(c); });
            if (!found || vec < best_vector) {
                best_vector = vec;
                found = ProperColoring{cls};
            }
            return false;
        });
        walk.run();
    }
    return found;
}

void for_each_partition_colouring(const Graph & g, int k,
                                  const std::function<bool(const std::vector<VertexSet> &)> & visit)
{
    PartitionWalk(g, k, visit).run();
}

ChromaticResult chromatic_number(const Graph & g, InvariantLimits limits)
{
    check_limits(g, limits);
    if (g.order() == 0)
        return {0, {}};
    int lower = std::max(1, clique_number(g));
    for (int k = lower;; ++k)
        if (auto c = colour_with(g, k))
            return {k, std::move(*c)};
}

ClassSizeResult s_of(const Graph & g, InvariantLimits limits)
{
    int chi = chromatic_number(g, limits).chi;
    if (chi < 2)
        throw std::domain_error("s(G) is undefined for graphs with chromatic number below 2");
    ClassSizeResult best{max_graph_order + 1, {}};
    PartitionWalk walk(
        g, chi,
        [&](const std::vector<VertexSet> & cls) {
            int s = min_class_size(cls);
            if (s < best.s)
                best = {s, ProperColoring{cls}};
            return best.s > 1;
        },
        [&](const std::vector<VertexSet> & cls, int) {
            return static_cast<int>(cls.size()) == chi && min_class_size(cls) >= best.s;
        });
    walk.run();
    return best;
}

TauResult tau_of(const Graph & g, InvariantLimits limits)
{
    int s = s_of(g, limits).s;
    int chi = chromatic_number(g, limits).chi;
    TauResult best;
    best.tau = max_graph_order + 1;
    PartitionWalk walk(
        g, chi,
        [&](const std::vector<VertexSet> & cls) {
            for (std::size_t last = 0; last < cls.size(); ++last) {
                if (set_size(cls[last]) != s)
                    continue;
                for_each_vertex(cls[last], [&](int v) {
                    for (std::size_t i = 0; i < cls.size(); ++i) {
                        if (i == last)
                            continue;
                        int d = set_size(g.neighbours(v) & cls[i]);
                        if (d < best.tau) {
                            best.tau = d;
                            best.witness.classes.clear();
                            for (std::size_t j = 0; j < cls.size(); ++j)
                                if (j != last)
                                    best.witness.classes.push_back(cls[j]);
                            best.witness.classes.push_back(cls[last]);
                            best.vertex = v;
                            best.class_index = static_cast<int>(i < last ? i : i - 1);
                        }
                    }
                });
            }
            return best.tau > 1;
        },
        [&](const std::vector<VertexSet> & cls, int) {
            return static_cast<int>(cls.size()) == chi && min_class_size(cls) > s;
        });
    walk.run();
    return best;
}

std::optional<Edge> critical_edge(const Graph & g, InvariantLimits limits)
{
    if (g.edge_count() == 0)
        throw std::domain_error("edge-criticality is undefined for edgeless graphs");
    int chi = chromatic_number(g, limits).chi;
    for (auto [u, v] : g.edges())
        if (colour_with(g.without_edge(u, v), chi - 1))
            return Edge{u, v};
    return std::nullopt;
}

bool is_edge_critical(const Graph & g, InvariantLimits limits)
{
    return critical_edge(g, limits).has_value();
}

CriticalWitness critical_coloring(const Graph & g, InvariantLimits limits)
{
    auto e = critical_edge(g, limits);
    if (!e)
        throw std::domain_error("graph is not edge-critical");
    auto [u, v] = *e;
    int chi = chromatic_number(g, limits).chi;
    auto base = lex_least_colouring(g.without_edge(u, v), chi - 1);
    // Any proper (chi-1)-colouring of G - uv gives u and v the same colour,
    // otherwise it would colour G itself.
    CriticalWitness w;
    w.edge = *e;
    w.singleton_vertex = u;
    w.coloring = std::move(*base);
    int shared = w.coloring.class_of(u);
    w.coloring.classes[shared] &= ~singleton(u);
    w.coloring.classes.push_back(singleton(u));
    w.low_class = shared;
    return w;
}

bool CriticalWitness::check(const Graph & g) const
{
    if (!coloring.valid_for(g) || coloring.classes.empty())
        return false;
    int k = coloring.size();
    if (coloring.classes.back() != singleton(singleton_vertex))
        return false;
    if (edge.first != singleton_vertex && edge.second != singleton_vertex)
        return false;
    if (!g.adjacent(edge.first, edge.second))
        return false;
    if (low_class < 0 || low_class >= k - 1)
        return false;
    if (set_size(g.neighbours(singleton_vertex) & coloring.classes[low_class]) != 1)
        return false;
    InvariantLimits unlimited{max_graph_order};
    int chi = chromatic_number(g, unlimited).chi;
    return chi == k && chromatic_number(g.without_edge(edge.first, edge.second), unlimited).chi == k - 1;
}

}
