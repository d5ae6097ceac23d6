#include "common.hpp"

#include <ramseylab/coloring.hpp>

#include <doctest.h>

using namespace ramseylab;

TEST_SUITE("coloring")
{
    TEST_CASE("complete host edges in lexicographic order")
    {
        auto h = HostGraph::complete(4);
        CHECK(h.describe() == "K4");
        CHECK(h.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK(h.pendant_vertex() == -1);
    }

    TEST_CASE("star-book host puts pendant edges last")
    {
        auto h = HostGraph::star_book(4, 2);
        CHECK(h.order() == 5);
        CHECK(h.describe() == "K4+S2");
        CHECK(h.pendant_vertex() == 4);
        auto e = h.edges();
        REQUIRE(e.size() == 8);
        CHECK(e[6] == Edge{0, 4});
        CHECK(e[7] == Edge{1, 4});
        CHECK_FALSE(h.has_edge(2, 4));
        CHECK_THROWS(HostGraph::star_book(3, 4));
        // full pendant degree gives K_{M+1}
        CHECK(HostGraph::star_book(5, 5).graph() == complete(6));
    }

    TEST_CASE("colours partition the host edges")
    {
        std::mt19937_64 rng(2);
        auto host = HostGraph::star_book(7, 3);
        auto c = testing::random_coloring(rng, host);
        CHECK(c.red().edge_count() + c.blue().edge_count() == host.graph().edge_count());
        for (int u = 0; u < host.order(); ++u)
            CHECK((c.rows(Colour::red)[u] & c.rows(Colour::blue)[u]) == 0);
        CHECK_FALSE(c.colour(5, 7).has_value());
        CHECK_THROWS(c.set(5, 7, Colour::red));
    }

    TEST_CASE("colour string and JSON round trip")
    {
        std::mt19937_64 rng(4);
        for (auto host : {HostGraph::complete(6), HostGraph::star_book(6, 4), HostGraph::complete(0)}) {
            auto c = testing::random_coloring(rng, host);
            auto s = c.colour_string();
            CHECK(s.size() == host.edges().size());
            CHECK(TwoColoring::from_string(host, s) == c);
            auto j = to_json(c);
            CHECK(coloring_from_json(nlohmann::json::parse(j.dump())) == c);
            CHECK(host_from_json(host_to_json(host)) == host);
        }
        CHECK_THROWS(TwoColoring::from_string(HostGraph::complete(3), "RB"));
        CHECK_THROWS(TwoColoring::from_string(HostGraph::complete(3), "RBX"));
    }

    TEST_CASE("restriction and red-graph construction")
    {
        auto c = TwoColoring::from_red_graph(cycle(5));
        CHECK(c.red() == cycle(5));
        CHECK(c.blue() == cycle(5).complement());
        TwoColoring s(HostGraph::star_book(5, 2), Colour::blue);
        s.set(0, 1, Colour::red);
        auto r = s.restricted_to_clique();
        CHECK(r.host() == HostGraph::complete(5));
        CHECK(r.colour(0, 1) == Colour::red);
        CHECK(r.blue().edge_count() == 9);
    }
}
