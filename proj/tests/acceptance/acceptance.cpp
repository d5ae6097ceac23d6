// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "common.hpp"
#include "oracles.hpp"

#include <ramseylab/arrowing.hpp>
#include <ramseylab/constructions.hpp>
#include <ramseylab/formulas.hpp>
#include <ramseylab/invariants.hpp>
#include <ramseylab/search.hpp>
#include <ramseylab/stability.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace ramseylab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failure notes for one criterion.
struct Check
{
    std::vector<std::string> failures;

    void expect(bool ok, const std::string & what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

struct Witness1
{
    int k, t, n;
    Graph g;
    std::string name;
};

std::vector<Witness1> criterion1_instances()
{
    std::vector<Witness1> out;
    for (int k = 2; k <= 3; ++k)
        for (int t = 2; t <= 3; ++t)
            for (int n = 1; n <= 4; ++n) {
                out.push_back({k, t, n, complete(k + 1), "K" + std::to_string(k + 1)});
                if (k == 2) {
                    out.push_back({k, t, n, cycle(5), "C5"});
                    out.push_back({k, t, n, cycle(7), "C7"});
                }
            }
    return out;
}

bool neither(const TwoColoring & c, const Graph & g, FanSpec spec)
{
    return !contains_red(c, g).found() && !contains_blue_fan(c, spec).found();
}

std::string criterion1(Check & ck)
{
    int checked = 0;
    int oracle_checked = 0;
    for (auto & w : criterion1_instances()) {
        FanSpec spec{w.n, w.t};
        std::ostringstream tag;
        tag << w.name << " k=" << w.k << " t=" << w.t << " n=" << w.n;
        // chi(G) = k+1 and s(G) = 1 for the chosen G
        ck.expect(chromatic_number(w.g).chi == w.k + 1 && s_of(w.g).s == 1, "bad G " + tag.str());
        for (auto & c : {ramsey_witness_fan(w.k, w.t, w.n), star_witness_fan(w.k, w.t, w.n)}) {
            ck.expect(neither(c, w.g, spec), "not Neither: " + tag.str() + " on " + c.host().describe());
            ++checked;
            if (c.host().order() <= 20) {
                ck.expect(oracle::is_neither(c, w.g, spec), "oracle disagrees: " + tag.str());
                ++oracle_checked;
            }
        }
    }
    return std::to_string(checked) + " witness colourings, " + std::to_string(oracle_checked) +
           " re-checked by brute force";
}

std::string criterion2(Check & ck)
{
    std::vector<Graph> corpus{complete(3), complete(4), complete(5), cycle(5), cycle(7), cycle(9), named_graph("W5")};
    int critical = 0;
    for (auto & g : testing::corpus())
        if (g.edge_count() > 0 && is_edge_critical(g))
            corpus.push_back(g);
    for (auto & g : corpus) {
        auto name = emit_graph6(g);
        ck.expect(is_edge_critical(g), "not edge-critical " + name);
        ck.expect(s_of(g).s == 1, "s != 1 for " + name);
        ck.expect(tau_of(g).tau == 1, "tau != 1 for " + name);
        auto w = critical_coloring(g);
        ck.expect(w.check(g), "critical witness invalid for " + name);
        ++critical;
    }
    return std::to_string(critical) + " edge-critical graphs";
}

struct Exact
{
    RamseyResult r33;
    StarCriticalResult rs33;
    RamseyResult rf22;
};

std::string criterion3(Check & ck, Exact & ex)
{
    SearchConfig cfg;
    auto t0 = Clock::now();
    ex.r33 = ramsey_number(complete(3), complete(3), 3, 8, cfg);
    double a = seconds_since(t0);
    ck.expect(ex.r33.status == ResultStatus::decided && ex.r33.value == 6, "R(K3,K3) != 6");
    ck.expect(a < 10, "R(K3,K3) too slow");

    t0 = Clock::now();
    ex.rs33 = star_critical_number(complete(3), complete(3), std::nullopt, cfg);
    double b = seconds_since(t0);
    ck.expect(ex.rs33.status == ResultStatus::decided && ex.rs33.value == 5, "r*(K3,K3) != 5");
    ck.expect(b < 60, "r*(K3,K3) too slow");

    t0 = Clock::now();
    ex.rf22 = ramsey_number(complete(3), FanSpec{2, 2}, 9, 10, cfg);
    double c = seconds_since(t0);
    ck.expect(ex.rf22.status == ResultStatus::decided && ex.rf22.value == 9, "R(K3,fan(2,2)) != 9");
    ck.expect(*predict_R_fan(2, 2, 2).value == 9, "knt+1 at k=t=n=2 is not 9");
    ck.expect(ex.rf22.upper && ex.rf22.upper->method == SymmetryMode::canonical_augmentation,
              "K9 not decided by triangle-free enumeration");
    ck.expect(ex.rf22.upper && ex.rf22.upper->stats.graphs_examined == 1897, "K9 did not examine 1897 graphs");
    ck.expect(oracle::brute_triangle_free_count(6) == 38, "triangle-free oracle count");
    ck.expect(c < 300, "R(K3,fan(2,2)) too slow");
    char buf[160];
    std::snprintf(buf, sizeof buf, "R(K3,K3)=%d %.3fs, r*(K3,K3)=%d %.3fs, R(K3,fan(2,2))=%d %.3fs", ex.r33.value, a,
                  ex.rs33.value, b, ex.rf22.value, c);
    return buf;
}

std::string criterion4(Check & ck)
{
    auto r = ramsey_number(complete(3), FanSpec{1, 2}, 3, 8, SearchConfig{});
    auto p = predict_R_fan(2, 2, 1);
    ck.expect(r.status == ResultStatus::decided && r.value == 6, "R(K3,fan(1,2)) != 6");
    ck.expect(p.value == 5, "predict_R_fan(2,2,1) != 5");
    ck.expect(p.validity == Validity::asymptotic_only, "prediction not flagged asymptotic_only");
    return "R=" + std::to_string(r.value) + " vs formula " + std::to_string(*p.value) + " (" +
           to_string(p.validity) + ")";
}

std::string criterion5(Check & ck)
{
    int count = 0;
    for (int k = 2; k <= 5; ++k)
        for (int t = 2; t <= 5; ++t)
            for (int n = 1; n <= 20; ++n) {
                int h = n * t + 1;
                ck.expect(predict_R_fan(k, t, n).value == burr_lower(k + 1, 1, h).value, "R formula mismatch");
                // fan parameters: chi(G) = k+1, s = tau = 1, delta(fan) = t, cut vertex present
                ck.expect(predict_rstar_fan(k, t, n).value == hao_lin_lower(k + 1, 1, 1, h, t, false).value,
                          "r* formula mismatch");
                ++count;
            }
    return std::to_string(count) + " parameter triples, " + std::to_string(2 * count) + " comparisons";
}

std::string criterion6(Check & ck)
{
    int graphs = 0;
    for (auto & g : testing::corpus()) {
        auto name = emit_graph6(g);
        int chi = chromatic_number(g).chi;
        ck.expect(chi == oracle::naive_chi(g), "chi mismatch " + name);
        if (chi >= 2) {
            ck.expect(s_of(g).s == oracle::naive_s(g), "s mismatch " + name);
            ck.expect(tau_of(g).tau == oracle::naive_tau(g), "tau mismatch " + name);
        }
        ++graphs;
    }
    std::mt19937_64 rng(20261018);
    int fans = 0;
    for (int i = 0; i < 500; ++i) {
        // red density from 0.35 to 0.75 so both outcomes are well represented
        auto c = testing::random_coloring(rng, HostGraph::complete(9), 0.35 + 0.1 * (i % 5));
        bool a = contains_blue_fan(c, {2, 2}).found();
        bool b = contains_blue_subgraph(c, fan({2, 2})).found();
        ck.expect(a == b, "fan detector mismatch on colouring " + c.colour_string());
        fans += a;
    }
    return std::to_string(graphs) + " graphs (orders 0..7), 500 colourings (" + std::to_string(fans) +
           " with a blue fan)";
}

bool same(const std::optional<Certificate> & a, const std::optional<Certificate> & b)
{
    if (a.has_value() != b.has_value())
        return false;
    if (!a)
        return true;
    return a->digest() == b->digest() && a->coloring == b->coloring && a->stats == b->stats;
}

std::string criterion7(Check & ck, const Exact & ex)
{
    SearchConfig cfg;
    cfg.workers = 8;
    auto r33 = ramsey_number(complete(3), complete(3), 3, 8, cfg);
    auto rs33 = star_critical_number(complete(3), complete(3), std::nullopt, cfg);
    auto rf22 = ramsey_number(complete(3), FanSpec{2, 2}, 9, 10, cfg);
    ck.expect(r33.value == ex.r33.value && same(r33.lower, ex.r33.lower) && same(r33.upper, ex.r33.upper),
              "R(K3,K3) differs with 8 workers");
    ck.expect(rs33.value == ex.rs33.value && same(rs33.lower, ex.rs33.lower) && same(rs33.upper, ex.rs33.upper),
              "r*(K3,K3) differs with 8 workers");
    ck.expect(rf22.value == ex.rf22.value && same(rf22.lower, ex.rf22.lower) && same(rf22.upper, ex.rf22.upper),
              "R(K3,fan(2,2)) differs with 8 workers");

    // the same instances through the colouring DFS as well
    for (auto m : {SymmetryMode::none, SymmetryMode::vertex_orbit}) {
        SearchConfig one;
        one.symmetry = m;
        SearchConfig eight = one;
        eight.workers = 8;
        for (int order : {5, 6}) {
            auto a = arrows(HostGraph::complete(order), complete(3), complete(3), one);
            auto b = arrows(HostGraph::complete(order), complete(3), complete(3), eight);
            ck.expect(a.verdict == b.verdict && a.certificate.digest() == b.certificate.digest(),
                      "worker variance on K" + std::to_string(order) + " " + to_string(m));
        }
    }

    std::vector<std::pair<Graph, oracle::Target>> problems{
        {complete(3), oracle::Target{complete(3)}}, {complete(3), oracle::Target{FanSpec{1, 2}}},
        {complete(3), oracle::Target{FanSpec{2, 1}}}, {path(3), oracle::Target{complete(3)}},
        {cycle(4), oracle::Target{path(3)}},         {complete(2), oracle::Target{complete(4)}},
        {path(4), oracle::Target{FanSpec{1, 3}}},
    };
    int runs = 0;
    for (int order = 1; order <= 5; ++order)
        for (auto & [g, h] : problems)
            for (auto m : {SymmetryMode::none, SymmetryMode::vertex_orbit, SymmetryMode::canonical_augmentation,
                           SymmetryMode::automatic})
                for (int workers : {1, 8}) {
                    // triangle-free enumeration only applies to G = K3
                    if (m == SymmetryMode::canonical_augmentation && g != complete(3))
                        continue;
                    SearchConfig c;
                    c.symmetry = m;
                    c.workers = workers;
                    auto host = HostGraph::complete(order);
                    BlueTarget target = std::holds_alternative<FanSpec>(h) ? BlueTarget{std::get<FanSpec>(h)}
                                                                          : BlueTarget{std::get<Graph>(h)};
                    auto res = arrows(host, g, target, c);
                    bool expected = oracle::brute_arrows(host, g, h);
                    ck.expect(res.decided() && (res.verdict == Verdict::arrows) == expected,
                              "enumeration mismatch on K" + std::to_string(order) + " " + to_string(m));
                    if (res.verdict == Verdict::counterexample)
                        ck.expect(oracle::is_neither(*res.certificate.coloring, g, h), "bad counterexample");
                    ++runs;
                }
    return "1 vs 8 workers on the exact instances; " + std::to_string(runs) + " runs on Complete(N<=5)";
}

std::string criterion8(Check & ck)
{
    int reports = 0;
    for (int k = 2; k <= 3; ++k)
        for (int t = 2; t <= 3; ++t)
            for (int n = 1; n <= 4; ++n) {
                FanSpec spec{n, t};
                for (auto & c : {ramsey_witness_fan(k, t, n), star_witness_fan(k, t, n).restricted_to_clique()}) {
                    auto p = optimize_partition(c, k);
                    auto rep = claims_report(c, p, core_sets(c, p), spec);
                    std::ostringstream tag;
                    tag << "k=" << k << " t=" << t << " n=" << n;
                    for (auto & claim : rep.claims)
                        ck.expect(claim.passed(), claim.name + " fails for " + tag.str());
                    ++reports;
                }
            }
    std::mt19937_64 rng(12);
    int partitions = 0;
    for (int order = 2; order <= 12; ++order)
        for (int i = 0; i < 8; ++i) {
            auto c = testing::random_coloring(rng, HostGraph::complete(order), 0.3 + 0.05 * i);
            auto p = optimize_partition(c, 2);
            ck.expect(p.metrics.deficiency == oracle::min_bipartition_deficiency(c),
                      "bipartition mismatch on " + std::to_string(order) + " vertices");
            ++partitions;
        }
    for (int t = 2; t <= 3; ++t)
        for (int n = 1; n * t * 2 <= 12; ++n) {
            auto c = ramsey_witness_fan(2, t, n);
            ck.expect(optimize_partition(c, 2).metrics.deficiency == oracle::min_bipartition_deficiency(c),
                      "bipartition mismatch on witness");
            ++partitions;
        }
    return std::to_string(reports) + " claims reports, " + std::to_string(partitions) + " bipartitions";
}

}

int main()
{
    Exact ex;
    std::vector<std::pair<int, std::function<std::string(Check &)>>> criteria{
        {1, criterion1},
        {2, criterion2},
        {3, [&](Check & c) { return criterion3(c, ex); }},
        {4, criterion4},
        {5, criterion5},
        {6, criterion6},
        {7, [&](Check & c) { return criterion7(c, ex); }},
        {8, criterion8},
    };
    int failed = 0;
    for (auto & [id, fn] : criteria) {
        Check ck;
        auto t0 = Clock::now();
        std::string summary;
        try {
            summary = fn(ck);
        }
        catch (const std::exception & e) {
            ck.failures.push_back(std::string("exception: ") + e.what());
        }
        double s = seconds_since(t0);
        bool ok = ck.failures.empty();
        failed += !ok;
        std::printf("%s criterion %d: %s [%.2fs]\n", ok ? "PASS" : "FAIL", id, summary.c_str(), s);
        for (std::size_t i = 0; i < ck.failures.size() && i < 10; ++i)
            std::printf("    %s\n", ck.failures[i].c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
