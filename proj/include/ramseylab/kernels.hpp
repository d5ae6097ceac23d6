#pragma once

#include <ramseylab/graph.hpp>

#include <cstdint>
#include <span>
#include <string_view>

namespace ramseylab::kernels {

enum class Isa
{
    scalar,
    avx2,
};

std::string_view isa_name(Isa isa);

/// Best variant supported by the running CPU.
Isa detected_isa();

/// Variant used by the dispatching entry points. Defaults to detected_isa().
Isa active_isa();

/// Forces a variant (falls back to scalar if the CPU lacks it). Intended for
/// tests and benchmarks; not thread-safe against concurrent kernel calls.
void set_active_isa(Isa isa);

/// out[v] = |rows[v] & mask| for every row. out.size() must be >= rows.size().
void masked_degrees(std::span<const VertexSet> rows, VertexSet mask, std::span<std::uint32_t> out);

/// Sum over v in `members` of |rows[v] & mask|.
std::uint64_t masked_degree_sum(std::span<const VertexSet> rows, VertexSet members, VertexSet mask);

namespace scalar {
void masked_degrees(std::span<const VertexSet> rows, VertexSet mask, std::span<std::uint32_t> out);
std::uint64_t masked_degree_sum(std::span<const VertexSet> rows, VertexSet members, VertexSet mask);
}

namespace avx2 {
void masked_degrees(std::span<const VertexSet> rows, VertexSet mask, std::span<std::uint32_t> out);
std::uint64_t masked_degree_sum(std::span<const VertexSet> rows, VertexSet members, VertexSet mask);
}

}
