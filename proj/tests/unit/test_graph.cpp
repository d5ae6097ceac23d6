#include "common.hpp"
#include "oracles.hpp"

#include <ramseylab/graph.hpp>
#include <ramseylab/graph6.hpp>

#include <doctest.h>

using namespace ramseylab;

namespace {

bool is_bipartite(const Graph & g)
{
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : members(g.neighbours(v))) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                }
                else if (side[w] == side[v])
                    return false;
            }
        }
    }
    return true;
}

}

TEST_SUITE("graph")
{
    TEST_CASE("complete graphs")
    {
        CHECK(complete(0).order() == 0);
        CHECK(complete(0).edge_count() == 0);
        auto k4 = complete(4);
        CHECK(k4.edge_count() == 6);
        for (int v = 0; v < 4; ++v)
            CHECK(k4.degree(v) == 3);
        CHECK(complete(9).edge_count() == 36);
    }

    TEST_CASE("cycles")
    {
        CHECK(cycle(3) == complete(3));
        auto c5 = cycle(5);
        CHECK(c5.edge_count() == 5);
        for (int v = 0; v < 5; ++v)
            CHECK(c5.degree(v) == 2);
        CHECK(c5.components().size() == 1);
        // girth 5: no triangle, no 4-cycle
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                if (a != b)
                    CHECK(set_size(c5.neighbours(a) & c5.neighbours(b)) <= 1);
        CHECK(is_bipartite(cycle(4)));
        CHECK_FALSE(is_bipartite(c5));
        CHECK_THROWS_AS(cycle(2), GraphError);
    }

    TEST_CASE("join and disjoint union")
    {
        auto f = join(complete(1), disjoint_union(2, complete(2)));
        CHECK(f.order() == 5);
        CHECK(f.edge_count() == 6);
        CHECK(join(complete(1), disjoint_union(1, complete(2))) == complete(3));
        auto h = cycle(5);
        CHECK(join(Graph(0), h) == h);

        auto m = disjoint_union(3, complete(2));
        CHECK(m.order() == 6);
        CHECK(m.edge_count() == 3);
        for (int v = 0; v < 6; ++v)
            CHECK(m.degree(v) == 1);
        CHECK(disjoint_union(1, h) == h);
        auto two = disjoint_union(2, complete(3));
        CHECK(two.order() == 6);
        CHECK(two.edge_count() == 6);
        CHECK(two.components().size() == 2);
    }

    TEST_CASE("fans")
    {
        CHECK(fan({1, 2}) == complete(3));
        auto f2 = fan({2, 2});
        CHECK(f2.order() == 5);
        CHECK(f2.edge_count() == 6);
        auto f23 = fan({2, 3});
        CHECK(f23.order() == 7);
        CHECK(f23.degree(0) == 6);
        CHECK(f23.induced(f23.vertices() & ~singleton(0)) == disjoint_union(2, complete(3)));
        CHECK_THROWS_AS(fan({0, 2}), GraphError);
    }

    TEST_CASE("constructor counts for 1 <= n, t <= 6")
    {
        for (int n = 1; n <= 6; ++n)
            for (int t = 1; t <= 6; ++t) {
                auto u = disjoint_union(n, complete(t));
                CHECK(u.order() == n * t);
                CHECK(u.edge_count() == n * t * (t - 1) / 2);
                auto j = join(complete(1), u);
                CHECK(j.order() == n * t + 1);
                CHECK(j.edge_count() == n * t * (t - 1) / 2 + n * t);
                auto f = fan({n, t});
                CHECK(f == j);
                CHECK(f.degree(0) == n * t);
                for (int v = 1; v < f.order(); ++v)
                    CHECK(f.degree(v) == t);
            }
    }

    TEST_CASE("removing the fan centre leaves n copies of K_t")
    {
        for (int n = 1; n <= 5; ++n)
            for (int t = 1; t <= 5; ++t) {
                auto f = fan({n, t});
                bool found = false;
                for (int c = 0; c < f.order() && !found; ++c) {
                    VertexSet rest = f.vertices() & ~singleton(c);
                    auto comps = f.components(rest);
                    if (static_cast<int>(comps.size()) != n)
                        continue;
                    bool cliques = true;
                    for (VertexSet comp : comps)
                        cliques = cliques && f.induced(comp) == complete(t);
                    found = cliques;
                }
                CHECK(found);
            }
    }

    TEST_CASE("named graphs")
    {
        CHECK(named_graph("K5") == complete(5));
        CHECK(named_graph("C7") == cycle(7));
        CHECK(named_graph("E3").edge_count() == 0);
        CHECK(named_graph("K3,3").edge_count() == 9);
        CHECK(named_graph("W5").edge_count() == 10);
        auto p = named_graph("Petersen");
        CHECK(p.order() == 10);
        CHECK(p.edge_count() == 15);
        CHECK_THROWS_AS(named_graph("X4"), GraphError);
        CHECK_THROWS_AS(named_graph("K"), GraphError);
    }

    TEST_CASE("edit operations")
    {
        Graph g(4);
        g.add_edge(0, 3);
        CHECK(g.adjacent(3, 0));
        CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
        CHECK_THROWS_AS(g.add_edge(0, 4), GraphError);
        g.remove_edge(0, 3);
        CHECK(g.edge_count() == 0);
        CHECK(complete(4).complement().edge_count() == 0);
        CHECK(cycle(5).complement().edge_count() == 5);
        std::vector<int> perm{1, 2, 3, 4, 0};
        CHECK(cycle(5).relabelled(perm) == cycle(5));
        CHECK_THROWS_AS(Graph(65), GraphError);
    }
}

TEST_SUITE("graph")
{
    TEST_CASE("graph6 matches the reference encoder")
    {
        CHECK(emit_graph6(cycle(5)) == oracle::reference_graph6(cycle(5)));
        auto c5 = parse_graph6(oracle::reference_graph6(cycle(5)));
        CHECK(c5 == cycle(5));
        CHECK(emit_graph6(Graph(0)) == "?");
        CHECK(emit_graph6(complete(2)) == "A_");
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            int n = static_cast<int>(rng() % 64);
            auto g = testing::random_graph(rng, n, 0.3);
            CHECK(emit_graph6(g) == oracle::reference_graph6(g));
        }
    }

    TEST_CASE("graph6 round trip on 1000 random graphs")
    {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 1000; ++i) {
            int n = static_cast<int>(rng() % 13);
            auto g = testing::random_graph(rng, n);
            auto s = emit_graph6(g);
            CHECK(parse_graph6(s) == g);
            CHECK(emit_graph6(parse_graph6(s)) == s);
        }
    }

    TEST_CASE("graph6 round trip on the corpus")
    {
        for (auto & g : testing::corpus())
            CHECK(parse_graph6(emit_graph6(g)) == g);
    }

    TEST_CASE("malformed graph6")
    {
        CHECK_THROWS_AS(parse_graph6(""), FormatError);
        CHECK_THROWS_AS(parse_graph6("D"), FormatError);          // missing data
        CHECK_THROWS_AS(parse_graph6("Dhcc"), FormatError);       // too long
        CHECK_THROWS_AS(parse_graph6("A`"), FormatError);         // padding bit set
        CHECK_THROWS_AS(parse_graph6("D h"), FormatError);        // bad character
        CHECK(parse_graph6(">>graph6<<Dhc") == cycle(5));
    }

    TEST_CASE("sparse6 is readable")
    {
        auto g = parse_sparse6(":Fa@x^");
        CHECK(g.order() == 7);
        CHECK(g.edge_count() == 4);
        CHECK(g.adjacent(0, 1));
        CHECK(g.adjacent(0, 2));
        CHECK(g.adjacent(1, 2));
        CHECK(g.adjacent(5, 6));
        CHECK(parse_graph_line(":Fa@x^") == g);
        CHECK(parse_graph_line("Dhc") == cycle(5));
    }

    TEST_CASE("corpus has the unlabelled counts for orders 0..7")
    {
        std::vector<int> count(8, 0);
        for (auto & g : testing::corpus())
            ++count[g.order()];
        CHECK(count == std::vector<int>{1, 1, 2, 4, 11, 34, 156, 1044});
    }
}
