#include <ramseylab/formulas.hpp>

#include <algorithm>
#include <limits>

namespace ramseylab {

std::string to_string(Validity v)
{
    switch (v) {
    case Validity::exact:
        return "exact";
    case Validity::lower_bound:
        return "lower_bound";
    case Validity::upper_bound:
        return "upper_bound";
    case Validity::asymptotic_only:
        return "asymptotic_only";
    }
    return "unknown";
}

nlohmann::json to_json(const FormulaResult & r)
{
    nlohmann::json j{{"source", r.source}, {"validity", to_string(r.validity)}};
    j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
    if (!r.condition.empty())
        j["condition"] = r.condition;
    if (!r.symbolic.empty())
        j["symbolic"] = r.symbolic;
    return j;
}

namespace {

void require(bool ok, const std::string & what)
{
    if (!ok)
        throw ParameterError(what);
}

const std::string large_n = "n sufficiently large";

}

FormulaResult burr_lower(int chi, int s, int h)
{
    require(chi >= 1 && s >= 1 && h >= s, "burr_lower needs chi >= 1 and h >= s >= 1");
    std::int64_t v = std::int64_t(chi - 1) * (h - 1) + s;
    return {v, "burr-lower", Validity::lower_bound, "H connected, |H| >= s(G)", "(chi-1)(h-1)+s"};
}

FormulaResult erdos_upper(std::int64_t r_gh, int h, int n)
{
    require(n >= 1 && h >= 0 && r_gh >= 1, "erdos_upper needs n >= 1");
    std::int64_t v = std::int64_t(n - 1) * h + r_gh;
    return {v, "erdos-upper", Validity::upper_bound, "bound for R(G, nH)", "(n-1)h+R(G,H)"};
}

FormulaResult hao_lin_lower(int chi, int s, int tau, int h, int delta, bool no_cut_or_delta1)
{
    require(chi >= 2 && s >= 1 && tau >= 0 && delta >= 0, "hao_lin_lower needs chi >= 2");
    require(h >= s + 1, "hao_lin_lower needs h >= s + 1");
    std::int64_t v = std::int64_t(chi - 2) * (h - 1) + std::min<std::int64_t>(h, delta + tau - 1);
    FormulaResult r{v, "hao-lin-lower", Validity::lower_bound, "H connected, |H| >= s(G) + 1",
                    "(chi-2)(h-1)+min(h,delta+tau-1)"};
    if (no_cut_or_delta1) {
        *r.value += s + 1;
        r.condition += ", H without cut vertex or delta(H) = 1";
        r.symbolic += "+s+1";
    }
    return r;
}

FormulaResult predict_R_fan(int k, int t, int n)
{
    require(k >= 2 && t >= 2 && n >= 1, "predict_R_fan needs k, t >= 2 and n >= 1");
    return {std::int64_t(k) * n * t + 1, "edge-critical-fan-R", Validity::asymptotic_only,
            "G edge-critical with chi(G) = k+1, " + large_n, "knt+1"};
}

FormulaResult predict_rstar_fan(int k, int t, int n)
{
    require(k >= 2 && t >= 2 && n >= 1, "predict_rstar_fan needs k, t >= 2 and n >= 1");
    return {std::int64_t(k - 1) * n * t + t, "edge-critical-fan-rstar", Validity::asymptotic_only,
            "G edge-critical with chi(G) = k+1, " + large_n, "(k-1)nt+t"};
}

FormulaResult known_result(char tag, const KnownParams & p)
{
    switch (tag) {
    case 'a':
        require(p.k >= 1 && p.n >= 1, "(a) needs k, n >= 1");
        return {std::int64_t(p.k - 1) * (p.n - 1) + 1, "chvatal-tree", Validity::exact, "T_n any tree on n vertices",
                "(k-1)(n-1)+1"};
    case 'b':
        require(p.k >= 2 && p.t >= 2 && p.n >= 1, "(b) needs k, t >= 2 and n >= 1");
        return {std::int64_t(p.k) * p.n * p.t + 1, "li-rousseau", Validity::asymptotic_only, large_n, "knt+1"};
    case 'c':
        require(p.k >= 2 && p.r >= 1 && p.h >= 1 && p.n >= 1, "(c) needs k >= 2, r >= 1, h >= 1, n >= 1");
        return {std::int64_t(p.k) * p.n * p.h + p.r, "hamm-hazelton-thompson-R", Validity::asymptotic_only,
                "under restrictions on the parameters", "knh+r"};
    case 'd':
        require(p.k >= 2 && p.t >= 3 && p.n >= 1, "(d) needs k >= 2, t >= 3 and n >= 1");
        return {std::int64_t(p.k) * (p.n + p.t - 1) + 1, "nikiforov-rousseau", Validity::asymptotic_only, large_n,
                "k(n+t-1)+1"};
    case 'e':
        require(p.k >= 1 && p.t >= 1 && p.n >= 1, "(e) needs k, t, n >= 1");
        return {2 * std::int64_t(p.n) * p.t + 1, "li-liu", Validity::asymptotic_only, large_n, "2nt+1"};
    case 'f':
        require(p.k >= 2 && p.t >= 2 && p.n >= 1, "(f) needs k, t >= 2 and n >= 1");
        return {std::int64_t(p.k - 1) * p.t * p.n + p.t, "hao-lin-rstar", Validity::asymptotic_only, large_n,
                "(k-1)tn+t"};
    case 'g':
        require(p.k >= 2 && p.r >= 1 && p.h >= 1 && p.n >= 1 && p.delta >= 0, "(g) needs k >= 2, r >= 1, h >= 1");
        return {std::int64_t(p.k - 1) * p.n * p.h + p.delta, "hamm-hazelton-thompson-rstar",
                Validity::asymptotic_only, "under restrictions on the parameters", "(k-1)nh+delta(H)"};
    case 'h':
        require(p.k >= 2 && p.t >= 2, "(h) needs k, t >= 2");
        return {std::nullopt, "hao-lin-book", Validity::asymptotic_only, "n -> infinity", "(k-1+o(1))n"};
    case 'i':
        require(p.m >= 1 && p.t >= 1 && p.n >= 1, "(i) needs m, t, n >= 1");
        return {std::int64_t(p.n) * p.t + p.t, "li-li-wang", Validity::asymptotic_only, large_n, "nt+t"};
    default:
        throw ParameterError(std::string("unknown result tag '") + tag + "'");
    }
}

std::int64_t clique_ramsey_upper(int a, int b)
{
    require(a >= 1 && b >= 1, "clique orders must be positive");
    // C(a+b-2, a-1), exact in 64 bits for the orders handled here.
    std::int64_t c = 1;
    int top = a + b - 2;
    int pick = std::min(a - 1, b - 1);
    for (int i = 1; i <= pick; ++i)
        c = c * (top - pick + i) / i;
    return c;
}

FormulaResult fan_ramsey_upper(int m, FanSpec spec)
{
    require(m >= 1 && spec.n >= 1 && spec.t >= 1, "fan_ramsey_upper needs m, n, t >= 1");
    // R(K_1, F) = 1 and R(K_2, F) = |F|.
    std::int64_t bound = m == 1 ? 1 : spec.order();
    for (int q = 3; q <= m; ++q) {
        std::int64_t blue_side = std::int64_t(spec.n - 1) * spec.t + clique_ramsey_upper(q, spec.t);
        bound += blue_side;
    }
    return {bound, "erdos-combined-upper", Validity::upper_bound, "",
            "R(K_m,F) <= R(K_{m-1},F) + (n-1)t + C(m+t-2,m-1)"};
}

FormulaResult combined_upper(const Graph & g, const std::optional<FanSpec> & fan_target, const Graph & h)
{
    int m = std::max(g.order(), 1);
    if (fan_target)
        return fan_ramsey_upper(m, *fan_target);
    return {clique_ramsey_upper(m, std::max(h.order(), 1)), "erdos-combined-upper", Validity::upper_bound, "",
            "C(|G|+|H|-2,|G|-1)"};
}

}
