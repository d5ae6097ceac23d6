#pragma once

#include <ramseylab/coloring.hpp>
#include <ramseylab/graph.hpp>
#include <ramseylab/invariants.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ramseylab {

/// The blue target: a generalised fan (searched by the specialised detector)
/// or an arbitrary graph.
using BlueTarget = std::variant<FanSpec, Graph>;

Graph blue_target_graph(const BlueTarget & h);
int blue_target_order(const BlueTarget & h);
std::string describe(const BlueTarget & h);

enum class EdgeOrderPolicy
{
    /// (i, j) by i then j; pendant edges last.
    lexicographic,
    /// (i, j) by j then i; pendant edges last.
    colexicographic,
};

enum class SymmetryMode
{
    /// canonical_augmentation when G is a triangle and the host is small
    /// enough, vertex_orbit otherwise (none under colexicographic order).
    automatic,
    none,
    /// Rows of the colouring sorted within cells of interchangeable vertices.
    vertex_orbit,
    /// Enumerate red triangle-free graphs up to isomorphism instead of colourings.
    canonical_augmentation,
};

std::string to_string(EdgeOrderPolicy p);
std::string to_string(SymmetryMode m);

struct SearchConfig
{
    EdgeOrderPolicy edge_order = EdgeOrderPolicy::lexicographic;
    SymmetryMode symmetry = SymmetryMode::automatic;
    int workers = 1;
    /// Colours of the first prefix_depth edges are fixed to split the search
    /// into independent subtrees.
    int prefix_depth = 8;
    std::uint64_t node_budget = 10'000'000'000ULL;
    double time_budget_seconds = 3600.0;
    int max_generic_order = 13;
    int max_fan_order = 10;
};

class BudgetError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct SearchStats
{
    std::uint64_t nodes = 0;
    std::uint64_t red_prunes = 0;
    std::uint64_t blue_prunes = 0;
    std::uint64_t symmetry_rejections = 0;
    std::uint64_t canonical_rejections = 0;
    std::uint64_t graphs_examined = 0;
    std::uint64_t subtrees = 0;

    SearchStats & operator+=(const SearchStats & o);
    bool operator==(const SearchStats &) const = default;
};

struct Certificate
{
    enum class Kind
    {
        counterexample,
        exhaustion,
        incomplete,
    };

    Kind kind = Kind::incomplete;
    HostGraph host = HostGraph::complete(0);
    std::optional<TwoColoring> coloring;
    SearchStats stats;
    /// Hash of everything that determines the search tree; the worker count
    /// is deliberately not part of it.
    std::uint64_t config_hash = 0;
    std::string configuration;
    SymmetryMode method = SymmetryMode::none;

    /// Hex digest over the statistics and the configuration hash.
    std::string digest() const;
};

nlohmann::json to_json(const Certificate & c);

enum class Verdict
{
    arrows,
    counterexample,
    budget_exhausted,
};

std::string to_string(Verdict v);

struct ArrowsResult
{
    Verdict verdict = Verdict::budget_exhausted;
    Certificate certificate;

    bool decided() const { return verdict != Verdict::budget_exhausted; }
};

/// Decides whether every red/blue colouring of `host` contains a red G or a
/// blue H. Throws SizeLimitError if the host exceeds the configured limit and
/// std::invalid_argument for inconsistent configurations.
ArrowsResult arrows(const HostGraph & host, const Graph & g, const BlueTarget & h, const SearchConfig & cfg);

enum class ResultStatus
{
    decided,
    unresolved,
    budget_exhausted,
};

std::string to_string(ResultStatus s);

struct RamseyResult
{
    ResultStatus status = ResultStatus::unresolved;
    int value = 0;
    /// Counterexample on K_{value-1} (absent when value - 1 < 1).
    std::optional<Certificate> lower;
    /// Exhaustion on K_value.
    std::optional<Certificate> upper;
    /// Every host probed, in order.
    std::vector<std::pair<int, Verdict>> probes;
};

/// Least N in [lo, hi] such that K_N arrows (G, H).
RamseyResult ramsey_number(const Graph & g, const BlueTarget & h, int lo, int hi, const SearchConfig & cfg);

struct StarCriticalResult
{
    ResultStatus status = ResultStatus::unresolved;
    int value = 0;
    int ramsey = 0;
    std::optional<Certificate> lower;
    std::optional<Certificate> upper;
    std::vector<std::pair<int, Verdict>> probes;
};

/// Least k such that K_{R-1} plus a pendant vertex of degree k arrows (G, H).
/// R is computed first when not supplied.
StarCriticalResult star_critical_number(const Graph & g, const BlueTarget & h, std::optional<int> ramsey,
                                        const SearchConfig & cfg);

nlohmann::json to_json(const RamseyResult & r);
nlohmann::json to_json(const StarCriticalResult & r);

}
