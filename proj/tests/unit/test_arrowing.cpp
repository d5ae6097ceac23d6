#include "common.hpp"
#include "oracles.hpp"

#include <ramseylab/arrowing.hpp>
#include <ramseylab/constructions.hpp>

#include <doctest.h>

using namespace ramseylab;

namespace {

TwoColoring pentagon() { return TwoColoring::from_red_graph(cycle(5)); }

}

TEST_SUITE("arrowing")
{
    TEST_CASE("red containment examples")
    {
        TwoColoring all_red(HostGraph::complete(5), Colour::red);
        auto w = contains_red(all_red, complete(3));
        REQUIRE(w.kind == Witness::Kind::red_embedding);
        CHECK(w.map == std::vector<int>{0, 1, 2});
        CHECK_FALSE(contains_red(burr_coloring(3, 1, 5), complete(3)).found());
        CHECK_FALSE(contains_red(pentagon(), complete(3)).found());
    }

    TEST_CASE("blue fan examples")
    {
        for (int n = 1; n <= 4; ++n)
            for (int t = 1; t <= 3; ++t) {
                FanSpec spec{n, t};
                TwoColoring all_blue(HostGraph::complete(n * t + 1), Colour::blue);
                auto w = contains_blue_fan(all_blue, spec);
                REQUIRE(w.kind == Witness::Kind::blue_fan);
                CHECK(w.centre == 0);
                CHECK(witness_valid(all_blue, w, nullptr, &spec));
                TwoColoring short_one(HostGraph::complete(n * t), Colour::blue);
                CHECK_FALSE(contains_blue_fan(short_one, spec).found());
            }
        CHECK_FALSE(contains_blue_fan(burr_coloring(3, 1, 5), {2, 2}).found());
    }

    TEST_CASE("generic blue containment examples")
    {
        TwoColoring all_blue(HostGraph::complete(6), Colour::blue);
        auto w = contains_blue_subgraph(all_blue, fan({2, 2}));
        CHECK(w.kind == Witness::Kind::blue_embedding);
        auto f = fan({2, 2});
        CHECK(witness_valid(all_blue, w, &f, nullptr));
        CHECK_FALSE(contains_blue_subgraph(pentagon(), complete(3)).found());
        CHECK_THROWS_AS(contains_blue_subgraph(all_blue, Graph(13)), PatternTooLarge);
    }

    TEST_CASE("fan detector equals generic detector on random colourings")
    {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 300; ++i) {
            int order = 5 + static_cast<int>(rng() % 9);
            FanSpec spec{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)};
            if (spec.order() > order)
                continue;
            auto c = testing::random_coloring(rng, HostGraph::complete(order), 0.3);
            auto a = contains_blue_fan(c, spec);
            auto b = contains_blue_subgraph(c, fan(spec));
            CHECK(a.found() == b.found());
            if (a.found())
                CHECK(witness_valid(c, a, nullptr, &spec));
        }
    }

    TEST_CASE("checkers agree with brute force")
    {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 200; ++i) {
            auto host = i % 2 ? HostGraph::complete(7) : HostGraph::star_book(6, 3);
            auto c = testing::random_coloring(rng, host);
            auto red = oracle::colour_class(c, Colour::red);
            auto blue = oracle::colour_class(c, Colour::blue);
            for (auto & g : {complete(3), cycle(4), path(4), complete(4)}) {
                auto w = contains_red(c, g);
                CHECK(w.found() == oracle::has_subgraph(red, g));
                if (w.found())
                    CHECK(witness_valid(c, w, &g, nullptr));
            }
            for (FanSpec spec : {FanSpec{1, 2}, FanSpec{2, 2}, FanSpec{3, 1}, FanSpec{1, 3}}) {
                CHECK(contains_blue_fan(c, spec).found() == oracle::has_fan(blue, spec));
            }
        }
    }

    TEST_CASE("red triangle check on K5 colourings with four red edges")
    {
        auto host = HostGraph::complete(5);
        auto edges = host.edges();
        int checked = 0;
        for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
            if (__builtin_popcount(mask) != 4)
                continue;
            TwoColoring c(host, Colour::blue);
            for (std::size_t e = 0; e < edges.size(); ++e)
                if ((mask >> e) & 1)
                    c.set(edges[e].first, edges[e].second, Colour::red);
            bool triple = false;
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b)
                    for (int d = b + 1; d < 5; ++d)
                        triple = triple || (c.colour(a, b) == Colour::red && c.colour(b, d) == Colour::red &&
                                            c.colour(a, d) == Colour::red);
            CHECK(contains_red(c, complete(3)).found() == triple);
            ++checked;
        }
        CHECK(checked == 210);
    }

    TEST_CASE("adding edges of the witness colour keeps witnesses")
    {
        std::mt19937_64 rng(13);
        FanSpec spec{2, 2};
        for (int i = 0; i < 100; ++i) {
            auto c = testing::random_coloring(rng, HostGraph::complete(9));
            auto edges = c.host().edges();
            auto e = edges[rng() % edges.size()];
            bool fan_before = contains_blue_fan(c, spec).found();
            bool red_before = contains_red(c, complete(3)).found();
            auto bluer = c;
            bluer.set(e.first, e.second, Colour::blue);
            auto redder = c;
            redder.set(e.first, e.second, Colour::red);
            if (fan_before)
                CHECK(contains_blue_fan(bluer, spec).found());
            if (red_before)
                CHECK(contains_red(redder, complete(3)).found());
        }
    }

    TEST_CASE("witness validation rejects tampered witnesses")
    {
        TwoColoring all_red(HostGraph::complete(5), Colour::red);
        auto g = complete(3);
        auto w = contains_red(all_red, g);
        CHECK(witness_valid(all_red, w, &g, nullptr));
        all_red.set(w.map[0], w.map[1], Colour::blue);
        CHECK_FALSE(witness_valid(all_red, w, &g, nullptr));
        w.map[1] = w.map[0];
        CHECK_FALSE(witness_valid(all_red, w, &g, nullptr));
    }

    TEST_CASE("blue degree bound")
    {
        auto burr = burr_coloring(3, 1, 5);
        auto rep = blue_degree_bound_check(burr, complete(3), {2, 2}, 3);
        CHECK(rep.bound == 4);
        CHECK(rep.max_blue_degree == 3);
        CHECK(rep.holds());

        TwoColoring all_red(HostGraph::complete(5), Colour::red);
        auto empty_red = blue_degree_bound_check(all_red, complete(6), {2, 2}, 3);
        CHECK(empty_red.max_blue_degree == 0);
        CHECK(empty_red.holds());

        auto star = star_witness_fan(2, 2, 2);
        CHECK(blue_degree_bound_check(star, complete(3), {2, 2}, 3).holds());

        CHECK_THROWS_AS(blue_degree_bound_check(all_red, complete(3), {2, 2}, 3), PremiseError);
    }

    TEST_CASE("witness JSON")
    {
        TwoColoring all_blue(HostGraph::complete(5), Colour::blue);
        auto j = to_json(contains_blue_fan(all_blue, {2, 2}));
        CHECK(j["kind"] == "blue_fan");
        CHECK(j["centre"] == 0);
        CHECK(j["blades"].size() == 2);
    }
}
