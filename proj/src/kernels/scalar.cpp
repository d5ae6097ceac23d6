#include <ramseylab/kernels.hpp>

namespace ramseylab::kernels::scalar {

void masked_degrees(std::span<const VertexSet> rows, VertexSet mask, std::span<std::uint32_t> out)
{
    for (std::size_t v = 0; v < rows.size(); ++v)
        out[v] = static_cast<std::uint32_t>(set_size(rows[v] & mask));
}

std::uint64_t masked_degree_sum(std::span<const VertexSet> rows, VertexSet members, VertexSet mask)
{
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < rows.size() && v < 64; ++v)
        if (contains(members, static_cast<int>(v)))
            total += static_cast<std::uint64_t>(set_size(rows[v] & mask));
    return total;
}

}
