#include <ramseylab/formulas.hpp>

#include <doctest.h>

using namespace ramseylab;

TEST_SUITE("formulas")
{
    TEST_CASE("burr lower bound")
    {
        auto r = burr_lower(3, 1, 5);
        CHECK(r.value == 9);
        CHECK(r.validity == Validity::lower_bound);
        CHECK(r.source == "burr-lower");
        CHECK(burr_lower(3, 1, 3).value == 5);
        CHECK(burr_lower(2, 2, 2).value == 3);
        CHECK_THROWS_AS(burr_lower(0, 1, 3), ParameterError);
        CHECK_THROWS_AS(burr_lower(3, 4, 3), ParameterError);
    }

    TEST_CASE("erdos upper bound")
    {
        auto r = erdos_upper(6, 3, 2);
        CHECK(r.value == 9);
        CHECK(r.validity == Validity::upper_bound);
        CHECK(erdos_upper(6, 3, 1).value == 6);
        CHECK_THROWS_AS(erdos_upper(6, 3, 0), ParameterError);
    }

    TEST_CASE("hao-lin lower bound")
    {
        // K3 with H = K3: chi 3, s 1, tau 1, h 3, delta 2
        CHECK(hao_lin_lower(3, 1, 1, 3, 2, false).value == 4);
        CHECK(hao_lin_lower(3, 1, 1, 3, 2, true).value == 6);
        // fan(2,2): h 5, delta 2
        CHECK(hao_lin_lower(3, 1, 1, 5, 2, false).value == 6);
        CHECK(hao_lin_lower(3, 1, 1, 5, 2, false).validity == Validity::lower_bound);
        CHECK_THROWS_AS(hao_lin_lower(1, 1, 1, 3, 2, false), ParameterError);
    }

    TEST_CASE("fan predictions")
    {
        auto r = predict_R_fan(2, 2, 5);
        CHECK(r.value == 21);
        CHECK(r.validity == Validity::asymptotic_only);
        CHECK(predict_rstar_fan(2, 2, 5).value == 12);
        CHECK(predict_rstar_fan(2, 2, 5).validity == Validity::asymptotic_only);
        CHECK(predict_R_fan(2, 2, 1).value == 5);
        CHECK_THROWS_AS(predict_R_fan(0, 2, 1), ParameterError);
    }

    TEST_CASE("predictions equal the general bounds with fan parameters")
    {
        for (int k = 2; k <= 5; ++k)
            for (int t = 2; t <= 5; ++t)
                for (int n = 1; n <= 20; ++n) {
                    int h = n * t + 1;
                    CHECK(predict_R_fan(k, t, n).value == burr_lower(k + 1, 1, h).value);
                    CHECK(predict_rstar_fan(k, t, n).value == hao_lin_lower(k + 1, 1, 1, h, t, false).value);
                }
    }

    TEST_CASE("predictions specialise to the listed results")
    {
        for (int k = 2; k <= 5; ++k)
            for (int t = 2; t <= 5; ++t)
                for (int n = 1; n <= 20; ++n) {
                    KnownParams p;
                    p.k = k;
                    p.t = t;
                    p.n = n;
                    p.m = 1;
                    CHECK(predict_R_fan(k, t, n).value == known_result('b', p).value);
                    CHECK(predict_rstar_fan(k, t, n).value == known_result('f', p).value);
                    if (k == 2) {
                        CHECK(predict_R_fan(2, t, n).value == known_result('e', p).value);
                        CHECK(predict_rstar_fan(2, t, n).value == known_result('i', p).value);
                    }
                }
    }

    TEST_CASE("known results")
    {
        KnownParams p;
        p.k = 3;
        p.n = 4;
        auto a = known_result('a', p);
        CHECK(a.value == 7);
        CHECK(a.validity == Validity::exact);
        p = {};
        p.k = 2;
        p.n = 3;
        p.t = 2;
        p.m = 1;
        CHECK(known_result('b', p).value == 13);
        CHECK(known_result('e', p).value == 13);
        CHECK(known_result('f', p).value == 8);
        CHECK(known_result('i', p).value == 8);
        CHECK(known_result('b', p).validity == Validity::asymptotic_only);
        p.t = 3;
        CHECK(known_result('d', p).value == 11);
        auto h = known_result('h', p);
        CHECK_FALSE(h.value.has_value());
        CHECK_FALSE(h.symbolic.empty());
        p = {};
        p.k = 2;
        p.n = 3;
        p.h = 4;
        p.r = 2;
        p.delta = 1;
        CHECK(known_result('c', p).value == 26);
        CHECK(known_result('g', p).value == 13);
        CHECK_THROWS_AS(known_result('z', p), ParameterError);
    }

    TEST_CASE("upper bounds")
    {
        CHECK(clique_ramsey_upper(3, 3) == 6);
        CHECK(clique_ramsey_upper(4, 4) == 20);
        CHECK(clique_ramsey_upper(2, 7) == 7);
        auto u = fan_ramsey_upper(3, {2, 2});
        REQUIRE(u.value);
        CHECK(*u.value >= 9);
        CHECK(u.validity == Validity::upper_bound);
        for (int k = 2; k <= 4; ++k)
            for (int t = 2; t <= 3; ++t)
                for (int n = 1; n <= 5; ++n)
                    CHECK(*fan_ramsey_upper(k + 1, {n, t}).value >= *predict_R_fan(k, t, n).value);
        auto c = combined_upper(complete(3), FanSpec{1, 2}, fan({1, 2}));
        CHECK(*c.value >= 6);
    }

    TEST_CASE("json carries every field")
    {
        auto j = to_json(predict_R_fan(2, 2, 2));
        CHECK(j["value"] == 9);
        CHECK(j["validity"] == "asymptotic_only");
        CHECK(j.contains("source"));
        CHECK(j.contains("condition"));
    }
}
