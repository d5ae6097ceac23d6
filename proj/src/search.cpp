#include <ramseylab/search.hpp>

#include <ramseylab/arrowing.hpp>
#include <ramseylab/canon.hpp>
#include <ramseylab/graph6.hpp>
#include <ramseylab/invariants.hpp>
#include <ramseylab/subgraph.hpp>
#include <ramseylab/triangle_free.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <thread>

namespace ramseylab {

Graph blue_target_graph(const BlueTarget & h)
{
    if (auto spec = std::get_if<FanSpec>(&h))
        return fan(*spec);
    return std::get<Graph>(h);
}

int blue_target_order(const BlueTarget & h)
{
    if (auto spec = std::get_if<FanSpec>(&h))
        return spec->order();
    return std::get<Graph>(h).order();
}

std::string describe(const BlueTarget & h)
{
    if (auto spec = std::get_if<FanSpec>(&h))
        return "fan(" + std::to_string(spec->n) + "," + std::to_string(spec->t) + ")";
    return "g6:" + emit_graph6(std::get<Graph>(h));
}

std::string to_string(EdgeOrderPolicy p)
{
    return p == EdgeOrderPolicy::lexicographic ? "lexicographic" : "colexicographic";
}

std::string to_string(SymmetryMode m)
{
    switch (m) {
    case SymmetryMode::automatic:
        return "automatic";
    case SymmetryMode::none:
        return "none";
    case SymmetryMode::vertex_orbit:
        return "vertex_orbit";
    case SymmetryMode::canonical_augmentation:
        return "canonical_augmentation";
    }
    return "unknown";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::arrows:
        return "arrows";
    case Verdict::counterexample:
        return "counterexample";
    case Verdict::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
}

std::string to_string(ResultStatus s)
{
    switch (s) {
    case ResultStatus::decided:
        return "decided";
    case ResultStatus::unresolved:
        return "unresolved";
    case ResultStatus::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
}

SearchStats & SearchStats::operator+=(const SearchStats & o)
{
    nodes += o.nodes;
    red_prunes += o.red_prunes;
    blue_prunes += o.blue_prunes;
    symmetry_rejections += o.symmetry_rejections;
    canonical_rejections += o.canonical_rejections;
    graphs_examined += o.graphs_examined;
    subtrees += o.subtrees;
    return *this;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void * data, std::size_t len)
{
    auto p = static_cast<const unsigned char *>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}

std::string Certificate::digest() const
{
    std::uint64_t h = fnv_offset;
    for (std::uint64_t field : {stats.nodes, stats.red_prunes, stats.blue_prunes, stats.symmetry_rejections,
                                stats.canonical_rejections, stats.graphs_examined, stats.subtrees, config_hash})
        h = fnv1a(h, &field, sizeof field);
    std::uint8_t k = static_cast<std::uint8_t>(kind);
    h = fnv1a(h, &k, 1);
    return hex64(h);
}

nlohmann::json to_json(const Certificate & c)
{
    nlohmann::json j;
    switch (c.kind) {
    case Certificate::Kind::counterexample:
        j = to_json(*c.coloring);
        j["certificate"] = "counterexample";
        break;
    case Certificate::Kind::exhaustion:
        j = {{"host", host_to_json(c.host)}, {"certificate", "exhaustion"}};
        break;
    case Certificate::Kind::incomplete:
        j = {{"host", host_to_json(c.host)}, {"certificate", "incomplete"}};
        break;
    }
    j["method"] = to_string(c.method);
    j["configuration"] = c.configuration;
    j["config_hash"] = hex64(c.config_hash);
    j["digest"] = c.digest();
    j["stats"] = {{"nodes", c.stats.nodes},
                  {"red_prunes", c.stats.red_prunes},
                  {"blue_prunes", c.stats.blue_prunes},
                  {"symmetry_rejections", c.stats.symmetry_rejections},
                  {"canonical_rejections", c.stats.canonical_rejections},
                  {"graphs_examined", c.stats.graphs_examined},
                  {"subtrees", c.stats.subtrees}};
    return j;
}

namespace {

/// Shared between workers: budgets and the least subtree index that has
/// produced a counterexample.
class Control
{
public:
    Control(const SearchConfig & cfg)
        : node_budget_(cfg.node_budget),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(cfg.time_budget_seconds)))
    {
    }

    /// Accounts for `n` more nodes; false once a budget is exhausted.
    bool charge(std::uint64_t n)
    {
        if (nodes_.fetch_add(n, std::memory_order_relaxed) + n > node_budget_ ||
            std::chrono::steady_clock::now() > deadline_)
            exhausted_.store(true, std::memory_order_relaxed);
        return !exhausted_.load(std::memory_order_relaxed);
    }

    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

    /// A task stops when budgets run out or a lower-indexed task has already
    /// found a counterexample.
    bool should_stop(std::size_t task) const
    {
        return exhausted() || task > first_found_.load(std::memory_order_relaxed);
    }

    void found(std::size_t task)
    {
        auto cur = first_found_.load();
        while (task < cur && !first_found_.compare_exchange_weak(cur, task))
            ;
    }

private:
    std::uint64_t node_budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
    std::atomic<std::size_t> first_found_{std::numeric_limits<std::size_t>::max()};
};

struct TaskOutcome
{
    enum class State
    {
        exhausted,
        found,
        aborted,
    };

    State state = State::aborted;
    SearchStats stats;
    std::optional<TwoColoring> coloring;
};

/// Runs tasks 0..count-1 on `workers` threads. The merge walks tasks in index
/// order, so the outcome does not depend on scheduling: the lowest-indexed
/// counterexample wins and statistics cover exactly the tasks before it.
template <typename RunTask>
ArrowsResult run_tasks(std::size_t count, int workers, Control & control, SearchStats prefix_stats,
                       RunTask && run_task)
{
    std::vector<TaskOutcome> outcomes(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            if (control.should_stop(i)) {
                outcomes[i].state = TaskOutcome::State::aborted;
                continue;
            }
            outcomes[i] = run_task(i);
            if (outcomes[i].state == TaskOutcome::State::found)
                control.found(i);
        }
    };
    int threads = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (threads == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }

    ArrowsResult result;
    result.certificate.stats = prefix_stats;
    result.certificate.stats.subtrees = count;
    for (auto & o : outcomes) {
        if (o.state == TaskOutcome::State::aborted) {
            result.verdict = Verdict::budget_exhausted;
            result.certificate.kind = Certificate::Kind::incomplete;
            return result;
        }
        result.certificate.stats += o.stats;
        if (o.state == TaskOutcome::State::found) {
            result.verdict = Verdict::counterexample;
            result.certificate.kind = Certificate::Kind::counterexample;
            result.certificate.coloring = std::move(o.coloring);
            return result;
        }
    }
    result.verdict = Verdict::arrows;
    result.certificate.kind = Certificate::Kind::exhaustion;
    return result;
}

/// Immutable problem description shared by all workers.
struct Problem
{
    HostGraph host;
    std::vector<Edge> edges;
    Graph g;
    SubgraphMatcher red;
    BlueTarget h;
    std::optional<SubgraphMatcher> blue;
    SymmetryMode symmetry;
    /// Interchangeable-vertex classes of the host before any colouring.
    std::vector<int> cell;

    Problem(const HostGraph & host_, const Graph & g_, const BlueTarget & h_, SymmetryMode symmetry_,
            EdgeOrderPolicy order)
        : host(host_), g(g_), red(g_), h(h_), symmetry(symmetry_)
    {
        edges = host.edges();
        if (order == EdgeOrderPolicy::colexicographic) {
            int m = host.clique_order();
            auto split = std::stable_partition(edges.begin(), edges.end(),
                                               [m](const Edge & e) { return e.second < m; });
            std::stable_sort(edges.begin(), split, [](const Edge & a, const Edge & b) {
                return std::pair(a.second, a.first) < std::pair(b.second, b.first);
            });
        }
        if (std::holds_alternative<Graph>(h))
            blue.emplace(std::get<Graph>(h));
        cell.assign(host.order(), 0);
        if (host.kind() == HostGraph::Kind::star_book)
            for (int v = host.pendant_degree(); v <= host.clique_order(); ++v)
                cell[v] = v == host.clique_order() ? 2 : 1;
    }

    bool blue_through(std::span<const VertexSet> rows, int u, int v) const
    {
        if (auto spec = std::get_if<FanSpec>(&h))
            return find_fan(rows, *spec, singleton(u) | singleton(v) | (rows[u] & rows[v])).has_value();
        return blue->find_through(rows, u, v).has_value();
    }

    bool blue_anywhere(std::span<const VertexSet> rows, VertexSet centres) const
    {
        if (auto spec = std::get_if<FanSpec>(&h))
            return find_fan(rows, *spec, centres).has_value();
        return blue->find(rows).has_value();
    }
};

/// Depth-first search over edge colourings in the problem's edge order.
class ColouringEngine
{
public:
    ColouringEngine(const Problem & p)
        : p_(p), red_(p.host.order(), 0), blue_(p.host.order(), 0), colour_(p.edges.size(), 0)
    {
    }

    void collect_prefixes(std::size_t depth, std::size_t target, std::vector<std::vector<std::uint8_t>> & out,
                          SearchStats & stats)
    {
        if (depth == target) {
            out.emplace_back(colour_.begin(), colour_.begin() + static_cast<std::ptrdiff_t>(depth));
            return;
        }
        ++stats.nodes;
        for (Colour c : {Colour::red, Colour::blue}) {
            if (!place(depth, c, stats))
                continue;
            collect_prefixes(depth + 1, target, out, stats);
            unplace(depth);
        }
    }

    TaskOutcome run(const std::vector<std::uint8_t> & prefix, Control & control, std::size_t task)
    {
        for (std::size_t d = 0; d < prefix.size(); ++d)
            set(d, static_cast<Colour>(prefix[d]));
        TaskOutcome out;
        control_ = &control;
        task_ = task;
        auto r = dfs(prefix.size(), out.stats);
        control.charge(pending_);
        pending_ = 0;
        if (r == TaskOutcome::State::found) {
            TwoColoring c(p_.host);
            for (std::size_t d = 0; d < p_.edges.size(); ++d)
                c.set(p_.edges[d].first, p_.edges[d].second, static_cast<Colour>(colour_[d]));
            out.coloring = std::move(c);
        }
        out.state = r;
        return out;
    }

private:
    void set(std::size_t depth, Colour c)
    {
        auto [u, v] = p_.edges[depth];
        auto & rows = c == Colour::red ? red_ : blue_;
        rows[u] |= singleton(v);
        rows[v] |= singleton(u);
        colour_[depth] = static_cast<std::uint8_t>(c);
    }

    void unplace(std::size_t depth)
    {
        auto [u, v] = p_.edges[depth];
        auto & rows = colour_[depth] == static_cast<std::uint8_t>(Colour::red) ? red_ : blue_;
        rows[u] &= ~singleton(v);
        rows[v] &= ~singleton(u);
    }

    /// Row-sorting constraint: among vertices above u that are still
    /// interchangeable (same initial cell, same colours to 0..u-1), the colours
    /// of row u must be non-decreasing with red before blue.
    bool breaks_symmetry(int u, int v) const
    {
        VertexSet between = first_n(v) & ~first_n(u + 1) & blue_[u];
        VertexSet low = first_n(u);
        bool clash = false;
        for_each_vertex(between, [&](int w) {
            clash = clash || (p_.cell[w] == p_.cell[v] && ((red_[w] ^ red_[v]) & low) == 0);
        });
        return clash;
    }

    bool place(std::size_t depth, Colour c, SearchStats & stats)
    {
        auto [u, v] = p_.edges[depth];
        if (c == Colour::red && p_.symmetry == SymmetryMode::vertex_orbit && v < p_.host.clique_order() &&
            breaks_symmetry(u, v)) {
            ++stats.symmetry_rejections;
            return false;
        }
        set(depth, c);
        bool hit = c == Colour::red ? p_.red.find_through(red_, u, v).has_value()
                                    : p_.blue_through(blue_, u, v);
        if (hit) {
            ++(c == Colour::red ? stats.red_prunes : stats.blue_prunes);
            unplace(depth);
            return false;
        }
        return true;
    }

    TaskOutcome::State dfs(std::size_t depth, SearchStats & stats)
    {
        ++stats.nodes;
        if (++pending_ == 4096) {
            control_->charge(pending_);
            pending_ = 0;
            if (control_->should_stop(task_))
                return TaskOutcome::State::aborted;
        }
        if (depth == p_.edges.size())
            return TaskOutcome::State::found;
        for (Colour c : {Colour::red, Colour::blue}) {
            if (!place(depth, c, stats))
                continue;
            auto r = dfs(depth + 1, stats);
            if (r != TaskOutcome::State::exhausted)
                return r;
            unplace(depth);
        }
        return TaskOutcome::State::exhausted;
    }

    const Problem & p_;
    std::vector<VertexSet> red_;
    std::vector<VertexSet> blue_;
    std::vector<std::uint8_t> colour_;
    Control * control_ = nullptr;
    std::size_t task_ = 0;
    std::uint64_t pending_ = 0;
};

ArrowsResult arrows_by_colourings(const Problem & p, const SearchConfig & cfg, Control & control)
{
    std::size_t target = std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg.prefix_depth, 0)), p.edges.size());
    std::vector<std::vector<std::uint8_t>> prefixes;
    SearchStats prefix_stats;
    ColouringEngine(p).collect_prefixes(0, target, prefixes, prefix_stats);
    return run_tasks(prefixes.size(), cfg.workers, control, prefix_stats, [&](std::size_t i) {
        return ColouringEngine(p).run(prefixes[i], control, i);
    });
}

void absorb(SearchStats & s, const EnumerationStats & e)
{
    s.nodes += e.candidates;
    s.canonical_rejections += e.canonical_rejections + e.duplicate_rejections + e.degree_rejections;
    s.blue_prunes += e.filter_rejections;
}

std::vector<VertexSet> complement_rows(const Graph & red, int order)
{
    std::vector<VertexSet> rows(order, 0);
    for (int v = 0; v < red.order(); ++v)
        rows[v] = ~red.neighbours(v) & first_n(red.order()) & ~singleton(v);
    return rows;
}

/// Red graph must be triangle-free, so enumerate red graphs up to isomorphism
/// and test each complement for a blue H.
ArrowsResult arrows_complete_by_augmentation(const Problem & p, const SearchConfig & cfg, Control & control)
{
    int n = p.host.order();
    SearchStats prefix_stats;
    EnumerationStats enum_stats;
    std::vector<Graph> parents;
    if (n > 0)
        parents = triangle_free_graphs(n - 1, &enum_stats);
    absorb(prefix_stats, enum_stats);

    auto check = [&](const Graph & red, SearchStats & stats) {
        ++stats.graphs_examined;
        auto rows = complement_rows(red, n);
        if (p.blue_anywhere(rows, red.vertices())) {
            ++stats.blue_prunes;
            return false;
        }
        return true;
    };

    if (n == 0) {
        SearchStats stats;
        if (check(Graph(0), stats)) {
            ArrowsResult r{Verdict::counterexample, {}};
            r.certificate.kind = Certificate::Kind::counterexample;
            r.certificate.coloring = TwoColoring::from_red_graph(Graph(0));
            r.certificate.stats = stats;
            return r;
        }
        ArrowsResult r{Verdict::arrows, {}};
        r.certificate.kind = Certificate::Kind::exhaustion;
        r.certificate.stats = stats;
        return r;
    }

    return run_tasks(parents.size(), cfg.workers, control, prefix_stats, [&](std::size_t i) {
        TaskOutcome out;
        EnumerationStats es;
        auto children = triangle_free_children(parents[i], &es);
        absorb(out.stats, es);
        control.charge(es.candidates);
        for (const Graph & child : children) {
            if (control.should_stop(i)) {
                out.state = TaskOutcome::State::aborted;
                return out;
            }
            if (check(child, out.stats)) {
                out.state = TaskOutcome::State::found;
                out.coloring = TwoColoring::from_red_graph(child);
                return out;
            }
        }
        out.state = TaskOutcome::State::exhausted;
        return out;
    });
}

/// Star-book host K_M + pendant of degree k: enumerate the colourings of K_M
/// with neither target (up to isomorphism), then every placement and colouring
/// of the pendant edges.
ArrowsResult arrows_star_book_by_augmentation(const Problem & p, const SearchConfig & cfg, Control & control)
{
    int m = p.host.clique_order();
    int k = p.host.pendant_degree();
    SearchStats prefix_stats;
    EnumerationStats enum_stats;
    auto blue_free = [&](const Graph & red) {
        auto rows = complement_rows(red, red.order());
        return !p.blue_anywhere(rows, red.vertices());
    };
    auto cores = triangle_free_graphs(m, &enum_stats, blue_free);
    absorb(prefix_stats, enum_stats);
    prefix_stats.graphs_examined += cores.size();

    return run_tasks(cores.size(), cfg.workers, control, prefix_stats, [&](std::size_t i) {
        TaskOutcome out;
        const Graph & red = cores[i];
        auto rows = complement_rows(red, m + 1);
        int pendant = m;
        std::uint64_t pending = 0;
        // k-subsets of the clique in increasing numeric order.
        VertexSet s = first_n(k);
        while (true) {
            auto neighbours = members(s);
            for (VertexSet pick = 0; pick < (VertexSet{1} << k); ++pick) {
                ++out.stats.nodes;
                if (++pending == 4096) {
                    control.charge(pending);
                    pending = 0;
                    if (control.should_stop(i)) {
                        out.state = TaskOutcome::State::aborted;
                        return out;
                    }
                }
                VertexSet red_side = 0;
                for (int b = 0; b < k; ++b)
                    if ((pick >> b) & 1u)
                        red_side |= singleton(neighbours[b]);
                bool triangle = false;
                for_each_vertex(red_side, [&](int x) { triangle = triangle || (red.neighbours(x) & red_side); });
                if (triangle) {
                    ++out.stats.red_prunes;
                    continue;
                }
                VertexSet blue_side = s & ~red_side;
                auto with_pendant = rows;
                with_pendant[pendant] = blue_side;
                for_each_vertex(blue_side, [&](int x) { with_pendant[x] |= singleton(pendant); });
                if (p.blue_anywhere(with_pendant, singleton(pendant) | blue_side)) {
                    ++out.stats.blue_prunes;
                    continue;
                }
                // Relabel so the pendant neighbourhood is 0..k-1.
                std::vector<int> perm(m + 1);
                int next_in = 0;
                int next_out = k;
                for (int v = 0; v < m; ++v)
                    perm[v] = contains(s, v) ? next_in++ : next_out++;
                perm[pendant] = m;
                TwoColoring c(p.host, Colour::blue);
                for (auto [u, v] : red.edges())
                    c.set(perm[u], perm[v], Colour::red);
                for_each_vertex(red_side, [&](int x) { c.set(perm[x], m, Colour::red); });
                control.charge(pending);
                out.state = TaskOutcome::State::found;
                out.coloring = std::move(c);
                return out;
            }
            if (k == 0 || k == m)
                break;
            // Gosper's hack: next subset of the same size.
            VertexSet low = s & (~s + 1);
            VertexSet ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
            if (s & ~first_n(m))
                break;
        }
        control.charge(pending);
        out.state = TaskOutcome::State::exhausted;
        return out;
    });
}

bool is_triangle(const Graph & g) { return g.order() == 3 && g.edge_count() == 3; }

SymmetryMode resolve_symmetry(const HostGraph & host, const Graph & g, const SearchConfig & cfg)
{
    bool triangle = is_triangle(g);
    switch (cfg.symmetry) {
    case SymmetryMode::automatic:
        if (triangle && host.order() <= max_triangle_free_order)
            return SymmetryMode::canonical_augmentation;
        return cfg.edge_order == EdgeOrderPolicy::lexicographic ? SymmetryMode::vertex_orbit : SymmetryMode::none;
    case SymmetryMode::canonical_augmentation:
        if (!triangle)
            throw std::invalid_argument("canonical augmentation requires G = K3");
        if (host.order() > max_triangle_free_order)
            throw SizeLimitError("canonical augmentation supports hosts up to " +
                                 std::to_string(max_triangle_free_order) + " vertices");
        return SymmetryMode::canonical_augmentation;
    case SymmetryMode::vertex_orbit:
        if (cfg.edge_order != EdgeOrderPolicy::lexicographic)
            throw std::invalid_argument("vertex-orbit symmetry breaking requires lexicographic edge order");
        return SymmetryMode::vertex_orbit;
    case SymmetryMode::none:
        return SymmetryMode::none;
    }
    return SymmetryMode::none;
}

}

ArrowsResult arrows(const HostGraph & host, const Graph & g, const BlueTarget & h, const SearchConfig & cfg)
{
    if (cfg.workers < 1)
        throw std::invalid_argument("worker count must be positive");
    if (cfg.node_budget == 0 || !(cfg.time_budget_seconds > 0))
        throw std::invalid_argument("search budgets must be positive");
    if (auto spec = std::get_if<FanSpec>(&h); spec && (spec->n < 1 || spec->t < 1))
        throw std::invalid_argument("fan needs n >= 1 and t >= 1");
    int limit = std::holds_alternative<FanSpec>(h) ? cfg.max_fan_order : cfg.max_generic_order;
    if (host.order() > limit)
        throw SizeLimitError("host " + host.describe() + " exceeds the search limit of " + std::to_string(limit) +
                             " vertices");
    if (blue_target_order(h) > max_graph_order)
        throw SizeLimitError("blue target too large");

    SymmetryMode mode = resolve_symmetry(host, g, cfg);
    Problem problem(host, g, h, mode, cfg.edge_order);
    Control control(cfg);

    std::string configuration = "host=" + host.describe() + ";G=" + emit_graph6(g) + ";H=" + describe(h) +
                                ";edge_order=" + to_string(cfg.edge_order) + ";symmetry=" + to_string(mode) +
                                ";prefix_depth=" + std::to_string(cfg.prefix_depth);

    ArrowsResult result;
    auto empty_hit = [&](const Graph & pattern) { return pattern.edge_count() == 0 && pattern.order() <= host.order(); };
    if (empty_hit(g) || empty_hit(blue_target_graph(h))) {
        // An edgeless target sits in every colouring.
        result.verdict = Verdict::arrows;
        result.certificate.kind = Certificate::Kind::exhaustion;
    }
    else if (mode == SymmetryMode::canonical_augmentation)
        result = host.kind() == HostGraph::Kind::complete ? arrows_complete_by_augmentation(problem, cfg, control)
                                                          : arrows_star_book_by_augmentation(problem, cfg, control);
    else
        result = arrows_by_colourings(problem, cfg, control);

    result.certificate.host = host;
    result.certificate.method = mode;
    result.certificate.configuration = configuration;
    result.certificate.config_hash = fnv1a(fnv_offset, configuration.data(), configuration.size());
    return result;
}

RamseyResult ramsey_number(const Graph & g, const BlueTarget & h, int lo, int hi, const SearchConfig & cfg)
{
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("ramsey bracket must satisfy 1 <= lo <= hi");
    RamseyResult out;
    std::optional<Certificate> last_counterexample;
    for (int n = lo; n <= hi; ++n) {
        auto r = arrows(HostGraph::complete(n), g, h, cfg);
        out.probes.emplace_back(n, r.verdict);
        if (r.verdict == Verdict::budget_exhausted) {
            out.status = ResultStatus::budget_exhausted;
            return out;
        }
        if (r.verdict == Verdict::counterexample) {
            last_counterexample = std::move(r.certificate);
            continue;
        }
        if (n == lo && n - 1 >= 1) {
            auto below = arrows(HostGraph::complete(n - 1), g, h, cfg);
            out.probes.emplace_back(n - 1, below.verdict);
            if (below.verdict == Verdict::budget_exhausted) {
                out.status = ResultStatus::budget_exhausted;
                return out;
            }
            if (below.verdict == Verdict::arrows) {
                out.status = ResultStatus::unresolved;
                return out;
            }
            last_counterexample = std::move(below.certificate);
        }
        out.status = ResultStatus::decided;
        out.value = n;
        out.lower = std::move(last_counterexample);
        out.upper = std::move(r.certificate);
        return out;
    }
    out.status = ResultStatus::unresolved;
    return out;
}

StarCriticalResult star_critical_number(const Graph & g, const BlueTarget & h, std::optional<int> ramsey,
                                        const SearchConfig & cfg)
{
    StarCriticalResult out;
    if (!ramsey) {
        int limit = std::holds_alternative<FanSpec>(h) ? cfg.max_fan_order : cfg.max_generic_order;
        auto r = ramsey_number(g, h, 1, limit, cfg);
        if (r.status != ResultStatus::decided) {
            out.status = r.status;
            return out;
        }
        ramsey = r.value;
    }
    out.ramsey = *ramsey;
    if (*ramsey < 2)
        throw std::invalid_argument("star-critical number needs R(G, H) >= 2");
    int m = *ramsey - 1;
    std::optional<Certificate> last_counterexample;
    for (int k = 0; k <= m; ++k) {
        auto r = arrows(HostGraph::star_book(m, k), g, h, cfg);
        out.probes.emplace_back(k, r.verdict);
        if (r.verdict == Verdict::budget_exhausted) {
            out.status = ResultStatus::budget_exhausted;
            return out;
        }
        if (r.verdict == Verdict::counterexample) {
            last_counterexample = std::move(r.certificate);
            continue;
        }
        out.status = ResultStatus::decided;
        out.value = k;
        out.lower = std::move(last_counterexample);
        out.upper = std::move(r.certificate);
        return out;
    }
    // K_{R-1} plus a full pendant is K_R, so this means the supplied R was wrong.
    out.status = ResultStatus::unresolved;
    return out;
}

namespace {

nlohmann::json probes_json(const std::vector<std::pair<int, Verdict>> & probes)
{
    auto arr = nlohmann::json::array();
    for (auto [n, v] : probes)
        arr.push_back({{"size", n}, {"verdict", to_string(v)}});
    return arr;
}

}

nlohmann::json to_json(const RamseyResult & r)
{
    nlohmann::json j{{"status", to_string(r.status)}, {"probes", probes_json(r.probes)}};
    if (r.status == ResultStatus::decided)
        j["value"] = r.value;
    if (r.lower)
        j["lower_certificate"] = to_json(*r.lower);
    if (r.upper)
        j["upper_certificate"] = to_json(*r.upper);
    return j;
}

nlohmann::json to_json(const StarCriticalResult & r)
{
    nlohmann::json j{{"status", to_string(r.status)}, {"ramsey", r.ramsey}, {"probes", probes_json(r.probes)}};
    if (r.status == ResultStatus::decided)
        j["value"] = r.value;
    if (r.lower)
        j["lower_certificate"] = to_json(*r.lower);
    if (r.upper)
        j["upper_certificate"] = to_json(*r.upper);
    return j;
}

}
