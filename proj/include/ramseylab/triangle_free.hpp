#pragma once

#include <ramseylab/graph.hpp>
#include <ramseylab/invariants.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace ramseylab {

inline constexpr int max_triangle_free_order = 10;

struct EnumerationStats
{
    /// Augmentations considered (parent plus an independent neighbourhood).
    std::uint64_t candidates = 0;
    /// Rejected because the new vertex cannot be the canonical deletion vertex
    /// by degree alone.
    std::uint64_t degree_rejections = 0;
    /// Rejected by the canonical-deletion orbit test.
    std::uint64_t canonical_rejections = 0;
    /// Accepted by the orbit test but isomorphic to an earlier sibling.
    std::uint64_t duplicate_rejections = 0;
    /// Rejected by the caller's hereditary filter.
    std::uint64_t filter_rejections = 0;

    EnumerationStats & operator+=(const EnumerationStats & o);
};

/// Hereditary property checked on every generated graph (in addition to being
/// triangle-free). Must be closed under vertex deletion for completeness.
using HereditaryFilter = std::function<bool(const Graph &)>;

/// Children of a triangle-free graph by canonical augmentation: add a vertex
/// adjacent to an independent set, keep the child only if the new vertex lies
/// in the orbit of the canonical deletion vertex (largest canonical label among
/// minimum-degree vertices), and drop isomorphic siblings. Children are
/// returned in canonical form, in a deterministic order.
std::vector<Graph> triangle_free_children(const Graph & parent, EnumerationStats * stats = nullptr,
                                          const HereditaryFilter & filter = {});

/// One representative (canonical form) of every triangle-free graph on
/// `order` vertices, up to isomorphism. Throws SizeLimitError above order 10.
std::vector<Graph> triangle_free_graphs(int order, EnumerationStats * stats = nullptr,
                                        const HereditaryFilter & filter = {});

/// Streams the same graphs to `visit`; stops early when it returns false.
void for_each_triangle_free(int order, const std::function<bool(const Graph &)> & visit);

}
