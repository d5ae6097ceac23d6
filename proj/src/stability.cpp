#include <ramseylab/stability.hpp>

#include <ramseylab/kernels.hpp>
#include <ramseylab/subgraph.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace ramseylab {

namespace {

std::vector<VertexSet> normalise(std::vector<VertexSet> classes)
{
    std::stable_sort(classes.begin(), classes.end(), [](VertexSet a, VertexSet b) {
        if ((a == 0) != (b == 0))
            return b == 0;
        return a != 0 && lowest(a) < lowest(b);
    });
    return classes;
}

std::vector<VertexSet> classes_of(std::span<const int> assignment, int k)
{
    std::vector<VertexSet> classes(k, 0);
    for (std::size_t v = 0; v < assignment.size(); ++v)
        classes[assignment[v]] |= singleton(static_cast<int>(v));
    return normalise(std::move(classes));
}

/// Host rows restricted to blue, i.e. host edges that would be missing cross red edges.
std::vector<VertexSet> blue_rows(const TwoColoring & c)
{
    auto b = c.rows(Colour::blue);
    return {b.begin(), b.end()};
}

struct Candidate
{
    std::uint64_t deficiency = ~std::uint64_t{0};
    std::vector<int> assignment;

    bool better_than(const Candidate & o) const
    {
        return deficiency != o.deficiency ? deficiency < o.deficiency : assignment < o.assignment;
    }
};

/// Assignment renumbered so classes are ordered by least member.
std::vector<int> normalised_assignment(std::span<const int> a)
{
    std::vector<int> rename(a.size() + 1, -1);
    std::vector<int> out(a.size());
    int next = 0;
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (rename[a[v]] < 0)
            rename[a[v]] = next++;
        out[v] = rename[a[v]];
    }
    return out;
}

class Climber
{
public:
    Climber(const TwoColoring & c, int k)
        : red_(c.rows(Colour::red).begin(), c.rows(Colour::red).end()), blue_(blue_rows(c)), n_(c.host().order()),
          k_(k), red_to_(k, std::vector<std::uint32_t>(n_)), blue_to_(k, std::vector<std::uint32_t>(n_))
    {
    }

    int order() const { return n_; }

    /// Greedy start: a red clique gives one seed per class; the remaining
    /// vertices join the class that costs least given the vertices so far.
    std::vector<int> greedy_start() const
    {
        std::vector<int> a(n_, -1);
        VertexSet all = first_n(n_);
        VertexSet cand = all;
        int seeds = 0;
        while (seeds < k_ && cand) {
            int best = -1;
            int best_deg = -1;
            for_each_vertex(cand, [&](int v) {
                int d = set_size(red_[v] & cand);
                if (d > best_deg) {
                    best = v;
                    best_deg = d;
                }
            });
            a[best] = seeds++;
            cand &= red_[best];
        }
        for (int v = 0; v < n_ && seeds < k_; ++v)
            if (a[v] < 0)
                a[v] = seeds++;
        for (int v = 0; v < n_; ++v) {
            if (a[v] >= 0)
                continue;
            int best = 0;
            long best_cost = 0;
            for (int j = 0; j < k_; ++j) {
                long cost = 0;
                for (int w = 0; w < n_; ++w) {
                    if (a[w] < 0)
                        continue;
                    if (a[w] == j)
                        cost += contains(red_[v], w);
                    else
                        cost += contains(blue_[v], w);
                }
                if (j == 0 || cost < best_cost) {
                    best = j;
                    best_cost = cost;
                }
            }
            a[v] = best;
        }
        return a;
    }

    /// Moves single vertices to a strictly better class until none helps.
    void climb(std::vector<int> & a)
    {
        bool moved = true;
        while (moved) {
            moved = false;
            tabulate(a);
            for (int v = 0; v < n_; ++v) {
                int cur = a[v];
                long cur_cost = static_cast<long>(red_to_[cur][v]) - blue_to_[cur][v];
                int best = cur;
                long best_cost = cur_cost;
                for (int j = 0; j < k_; ++j) {
                    long cost = static_cast<long>(red_to_[j][v]) - blue_to_[j][v];
                    if (cost < best_cost) {
                        best = j;
                        best_cost = cost;
                    }
                }
                if (best != cur) {
                    a[v] = best;
                    moved = true;
                    tabulate(a);
                }
            }
        }
    }

    std::uint64_t deficiency(std::span<const int> a) const
    {
        std::uint64_t d = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                if (a[u] == a[v])
                    d += contains(red_[u], v);
                else
                    d += contains(blue_[u], v);
            }
        return d;
    }

    /// Least (deficiency, assignment) over all partitions into at most k
    /// classes, as restricted growth strings with branch and bound.
    Candidate exhaustive() const
    {
        Candidate best;
        std::vector<int> a(n_, 0);
        auto rec = [&](auto & self, int v, int used, std::uint64_t cost, std::vector<VertexSet> & classes) -> void {
            if (cost >= best.deficiency)
                return;
            if (v == n_) {
                best.deficiency = cost;
                best.assignment = a;
                return;
            }
            int top = std::min(used + 1, k_);
            for (int j = 0; j < top; ++j) {
                VertexSet others = 0;
                for (int i = 0; i < used; ++i)
                    if (i != j)
                        others |= classes[i];
                std::uint64_t add = set_size(red_[v] & classes[j]) + set_size(blue_[v] & others);
                a[v] = j;
                classes[j] |= singleton(v);
                self(self, v + 1, std::max(used, j + 1), cost + add, classes);
                classes[j] &= ~singleton(v);
            }
        };
        std::vector<VertexSet> classes(k_, 0);
        if (n_ == 0)
            return {0, {}};
        rec(rec, 0, 0, 0, classes);
        return best;
    }

private:
    void tabulate(std::span<const int> a)
    {
        std::vector<VertexSet> masks(k_, 0);
        for (int v = 0; v < n_; ++v)
            masks[a[v]] |= singleton(v);
        for (int j = 0; j < k_; ++j) {
            kernels::masked_degrees(red_, masks[j], red_to_[j]);
            kernels::masked_degrees(blue_, masks[j], blue_to_[j]);
        }
    }

    std::vector<VertexSet> red_;
    std::vector<VertexSet> blue_;
    int n_;
    int k_;
    std::vector<std::vector<std::uint32_t>> red_to_;
    std::vector<std::vector<std::uint32_t>> blue_to_;
};

bool exhaustive_is_cheap(int n, int k, int max_order)
{
    if (n > max_order)
        return false;
    double count = std::pow(static_cast<double>(k), std::max(n - 1, 0));
    return count <= double(1 << 24);
}

}

std::vector<int> StabilityPartition::assignment(int order) const
{
    std::vector<int> a(order, -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for_each_vertex(classes[i], [&](int v) {
            if (v < order)
                a[v] = static_cast<int>(i);
        });
    return a;
}

PartitionMetrics partition_metrics(const TwoColoring & c, std::span<const VertexSet> classes)
{
    VertexSet all = c.host().graph().vertices();
    VertexSet seen = 0;
    for (VertexSet s : classes) {
        if (s & seen)
            throw std::invalid_argument("partition classes overlap");
        seen |= s;
    }
    if (seen != all)
        throw std::invalid_argument("partition classes do not cover the host vertices");

    auto red = c.rows(Colour::red);
    auto host = c.host().graph().rows();
    PartitionMetrics m;
    std::uint64_t red_total = kernels::masked_degree_sum(red, all, all) / 2;
    std::uint64_t host_total = kernels::masked_degree_sum(host, all, all) / 2;
    std::uint64_t red_inside = 0;
    std::uint64_t host_inside = 0;
    for (VertexSet s : classes) {
        std::uint64_t r = kernels::masked_degree_sum(red, s, s) / 2;
        m.internal_red.push_back(r);
        red_inside += r;
        host_inside += kernels::masked_degree_sum(host, s, s) / 2;
        m.sizes.push_back(set_size(s));
    }
    m.missing_cross_red = (host_total - host_inside) - (red_total - red_inside);
    m.deficiency = red_inside + m.missing_cross_red;
    return m;
}

StabilityPartition make_partition(const TwoColoring & c, std::vector<VertexSet> classes, double xi)
{
    StabilityPartition p;
    p.classes = normalise(std::move(classes));
    p.xi = xi;
    p.metrics = partition_metrics(c, p.classes);
    return p;
}

StabilityPartition optimize_partition(const TwoColoring & c, int k, const PartitionOptions & opts)
{
    if (k < 2)
        throw std::invalid_argument("optimize_partition needs k >= 2");
    if (opts.restarts < 1 || opts.workers < 1)
        throw std::invalid_argument("restarts and workers must be positive");
    Climber base(c, k);
    int n = base.order();

    if (opts.exhaustive && exhaustive_is_cheap(n, k, opts.exhaustive_max_order)) {
        auto best = base.exhaustive();
        return make_partition(c, classes_of(best.assignment, k), opts.xi);
    }

    std::vector<Candidate> results(opts.restarts);
    std::atomic<int> next{0};
    auto worker = [&]() {
        Climber climber(c, k);
        while (true) {
            int r = next.fetch_add(1);
            if (r >= opts.restarts)
                return;
            std::vector<int> a;
            if (r == 0)
                a = climber.greedy_start();
            else {
                std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r)));
                std::uniform_int_distribution<int> pick(0, k - 1);
                a.resize(n);
                for (auto & x : a)
                    x = pick(rng);
            }
            climber.climb(a);
            results[r] = {climber.deficiency(a), normalised_assignment(a)};
        }
    };
    int threads = std::min(opts.workers, opts.restarts);
    if (threads == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }
    Candidate best = results[0];
    for (auto & r : results)
        if (r.better_than(best))
            best = r;
    return make_partition(c, classes_of(best.assignment, k), opts.xi);
}

CoreSets core_sets(const TwoColoring & c, const StabilityPartition & p, double xi)
{
    if (!(xi > 0 && xi < 1))
        throw std::invalid_argument("xi must lie in (0, 1)");
    CoreSets out;
    out.xi = xi;
    out.threshold_factor = 1.0 - 2.0 * std::sqrt(xi);
    auto red = c.rows(Colour::red);
    std::vector<std::uint32_t> deg(red.size());
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        VertexSet core = p.classes[i];
        for (std::size_t j = 0; j < p.classes.size(); ++j) {
            if (j == i)
                continue;
            kernels::masked_degrees(red, p.classes[j], deg);
            double need = out.threshold_factor * set_size(p.classes[j]);
            for_each_vertex(core, [&](int x) {
                if (deg[x] + 1e-9 < need)
                    core &= ~singleton(x);
            });
        }
        out.cores.push_back(core);
    }
    return out;
}

bool ClaimResult::passed() const { return std::all_of(per_class.begin(), per_class.end(), [](bool b) { return b; }); }

bool ClaimsReport::all_passed() const
{
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult & c) { return c.passed(); });
}

const ClaimResult & ClaimsReport::claim(const std::string & name) const
{
    for (auto & c : claims)
        if (c.name == name)
            return c;
    throw std::out_of_range("no claim named " + name);
}

namespace {

bool blue_clique(std::span<const VertexSet> blue, VertexSet s)
{
    bool ok = true;
    for_each_vertex(s, [&](int x) { ok = ok && (blue[x] & s) == (s & ~singleton(x)); });
    return ok;
}

}

ClaimsReport claims_report(const TwoColoring & c, const StabilityPartition & p, const CoreSets & cores, FanSpec spec)
{
    if (cores.cores.size() != p.classes.size())
        throw std::invalid_argument("core sets do not match the partition");
    auto blue = c.rows(Colour::blue);
    double k = static_cast<double>(p.classes.size());
    SubgraphMatcher blades(disjoint_union(spec.n, complete(spec.t)));

    ClaimsReport r;
    r.cores = cores;
    r.claims = {
        {"core_size", "|V_i'| >= (1 - 2k sqrt(xi))|V_i|", {}},
        {"core_blue_clique", "B[V_i'] is complete", {}},
        {"core_to_rest_blue", "E(V_i', V_i \\ V_i') in B", {}},
        {"class_size", "|V_i| = nt and B[V_i] has n disjoint K_t", {}},
        {"rest_blue_clique", "B[V_i \\ V_i'] is complete", {}},
    };
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        VertexSet v = p.classes[i];
        VertexSet core = cores.cores[i];
        VertexSet rest = v & ~core;
        r.claims[0].per_class.push_back(set_size(core) + 1e-9 >=
                                        (1.0 - 2.0 * k * std::sqrt(cores.xi)) * set_size(v));
        r.claims[1].per_class.push_back(blue_clique(blue, core));
        bool across = true;
        for_each_vertex(core, [&](int x) { across = across && (blue[x] & rest) == rest; });
        r.claims[2].per_class.push_back(across);
        bool sized = set_size(v) == spec.n * spec.t;
        if (sized) {
            std::vector<VertexSet> inside(blue.size(), 0);
            for_each_vertex(v, [&](int x) { inside[x] = blue[x] & v; });
            sized = blades.find(inside).has_value();
        }
        r.claims[3].per_class.push_back(sized);
        r.claims[4].per_class.push_back(blue_clique(blue, rest));
    }
    return r;
}

nlohmann::json to_json(const StabilityPartition & p)
{
    auto classes = nlohmann::json::array();
    for (VertexSet s : p.classes)
        classes.push_back(members(s));
    return {{"classes", classes},
            {"xi", p.xi},
            {"metrics",
             {{"internal_red", p.metrics.internal_red},
              {"missing_cross_red", p.metrics.missing_cross_red},
              {"sizes", p.metrics.sizes},
              {"deficiency", p.metrics.deficiency}}}};
}

nlohmann::json to_json(const CoreSets & s)
{
    auto cores = nlohmann::json::array();
    for (VertexSet c : s.cores)
        cores.push_back(members(c));
    return {{"cores", cores}, {"xi", s.xi}, {"threshold_factor", s.threshold_factor}};
}

nlohmann::json to_json(const ClaimsReport & r)
{
    auto claims = nlohmann::json::array();
    for (auto & c : r.claims)
        claims.push_back({{"name", c.name}, {"statement", c.statement}, {"per_class", c.per_class}, {"passed", c.passed()}});
    return {{"claims", claims}, {"core_sets", to_json(r.cores)}, {"all_passed", r.all_passed()}};
}

}
