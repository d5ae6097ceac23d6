#pragma once

#include <ramseylab/coloring.hpp>
#include <ramseylab/graph.hpp>

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ramseylab {

struct PartitionMetrics
{
    /// Red edges inside each class.
    std::vector<std::uint64_t> internal_red;
    /// Host edges between different classes that are not red.
    std::uint64_t missing_cross_red = 0;
    std::vector<int> sizes;
    std::uint64_t deficiency = 0;
};

struct StabilityPartition
{
    /// Classes V_1..V_k, numbered by least member; empty classes last.
    std::vector<VertexSet> classes;
    double xi = 0.01;
    PartitionMetrics metrics;

    /// Class index of every vertex.
    std::vector<int> assignment(int order) const;
};

/// Metrics of an arbitrary partition. Throws std::invalid_argument if the
/// classes do not partition the host vertices.
PartitionMetrics partition_metrics(const TwoColoring & c, std::span<const VertexSet> classes);

/// Wraps explicit classes (normalised) with their metrics.
StabilityPartition make_partition(const TwoColoring & c, std::vector<VertexSet> classes, double xi = 0.01);

struct PartitionOptions
{
    int restarts = 8;
    std::uint64_t seed = 0;
    int workers = 1;
    /// Below this many vertices every partition is tried (when cheap enough).
    int exhaustive_max_order = 12;
    bool exhaustive = true;
    double xi = 0.01;
};

/// Minimises internal red edges plus missing cross red edges over partitions
/// into k classes. Restart 0 is seeded greedily from a red clique, the others
/// randomly; each is improved by moving single vertices to their best class.
/// Ties go to the lexicographically least assignment, so the answer does not
/// depend on the worker count.
StabilityPartition optimize_partition(const TwoColoring & c, int k, const PartitionOptions & opts = {});

struct CoreSets
{
    std::vector<VertexSet> cores;
    double xi = 0.01;
    /// 1 - 2 sqrt(xi).
    double threshold_factor = 1.0;
};

/// V_i' = vertices of V_i with red degree at least (1 - 2 sqrt(xi))|V_j| into
/// every other class V_j.
CoreSets core_sets(const TwoColoring & c, const StabilityPartition & p, double xi);
inline CoreSets core_sets(const TwoColoring & c, const StabilityPartition & p) { return core_sets(c, p, p.xi); }

struct ClaimResult
{
    std::string name;
    std::string statement;
    std::vector<bool> per_class;

    bool passed() const;
};

struct ClaimsReport
{
    std::vector<ClaimResult> claims;
    CoreSets cores;

    bool all_passed() const;
    const ClaimResult & claim(const std::string & name) const;
};

/// Evaluates the structural statements about an extremal colouring for the
/// fan K1 + nKt on a concrete colouring:
///   core_size            |V_i'| >= (1 - 2k sqrt(xi))|V_i|
///   core_blue_clique     B[V_i'] complete
///   core_to_rest_blue    every V_i' to V_i \ V_i' pair blue
///   class_size           |V_i| = nt and B[V_i] holds n disjoint K_t
///   rest_blue_clique     B[V_i \ V_i'] complete
ClaimsReport claims_report(const TwoColoring & c, const StabilityPartition & p, const CoreSets & cores, FanSpec spec);

nlohmann::json to_json(const StabilityPartition & p);
nlohmann::json to_json(const CoreSets & s);
nlohmann::json to_json(const ClaimsReport & r);

}
