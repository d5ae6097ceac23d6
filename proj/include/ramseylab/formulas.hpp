#pragma once

#include <ramseylab/graph.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ramseylab {

enum class Validity
{
    exact,
    lower_bound,
    upper_bound,
    /// Holds only beyond an unquantified threshold (or under side conditions
    /// recorded in FormulaResult::condition).
    asymptotic_only,
};

std::string to_string(Validity v);

struct FormulaResult
{
    /// Absent when the result is only known up to an o(1) term.
    std::optional<std::int64_t> value;
    std::string source;
    Validity validity = Validity::exact;
    std::string condition;
    std::string symbolic;
};

nlohmann::json to_json(const FormulaResult & r);

class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// R(G, H) >= (chi - 1)(h - 1) + s for connected H on h vertices.
FormulaResult burr_lower(int chi, int s, int h);

/// R(G, nH) <= (n - 1)h + R(G, H).
FormulaResult erdos_upper(std::int64_t r_gh, int h, int n);

/// r*(G, H) >= (chi - 2)(h - 1) + min(h, delta + tau - 1), plus s + 1 when H
/// has no cut vertex or delta(H) = 1.
FormulaResult hao_lin_lower(int chi, int s, int tau, int h, int delta, bool no_cut_or_delta1);

/// R(G, K1 + nKt) = knt + 1 for edge-critical G with chi(G) = k + 1, n large.
FormulaResult predict_R_fan(int k, int t, int n);

/// r*(G, K1 + nKt) = (k - 1)nt + t under the same hypotheses.
FormulaResult predict_rstar_fan(int k, int t, int n);

/// Parameters for known_result; each tag reads the fields it needs.
struct KnownParams
{
    int k = 0;
    int n = 0;
    int t = 0;
    int h = 0;
    int r = 0;
    int m = 0;
    int delta = 0;
};

/// Published values for generalised fans and related graphs, tags 'a'..'i':
///   a  R(K_k, T_n) = (k-1)(n-1) + 1
///   b  R(K_{k+1}, K1 + nKt) = knt + 1
///   c  R(rK_{k+1}, K1 + nH) = knh + r
///   d  R(K_{k+1}, Kt + nK1) = k(n + t - 1) + 1
///   e  R(C_{2k+1}, K1 + nKt) = 2nt + 1
///   f  r*(K_{k+1}, K1 + nKt) = (k-1)tn + t
///   g  r*(rK_{k+1}, K1 + nH) = (k-1)nh + delta(H)
///   h  r*(K_{k+1}, Kt + nK1) = (k - 1 + o(1))n
///   i  r*(C_{2m+1}, K1 + nKt) = nt + t
FormulaResult known_result(char tag, const KnownParams & p);

/// R(n, m) style binomial bound R(K_a, K_b) <= C(a + b - 2, a - 1).
std::int64_t clique_ramsey_upper(int a, int b);

/// Upper bound for R(K_m, K1 + nKt) by recursion on m: a vertex with large red
/// degree finds K_{m-1} or the fan in its red neighbourhood, otherwise its blue
/// neighbourhood holds K_m or nKt.
FormulaResult fan_ramsey_upper(int m, FanSpec spec);

/// Upper bound for R(G, H) through R(K_|G|, K1 + nKt) or R(K_|G|, K_|H|).
FormulaResult combined_upper(const Graph & g, const std::optional<FanSpec> & fan_target, const Graph & h);

}
