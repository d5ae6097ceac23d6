#include <ramseylab/kernels.hpp>

#include <immintrin.h>

namespace ramseylab::kernels::avx2 {

namespace {

// Per-byte popcount through a nibble lookup, then horizontal byte sums per
// 64-bit lane. AVX2 has no native 64-bit popcount.
inline __m256i popcount_epi64(__m256i x)
{
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_nibble = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(x, low_nibble);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low_nibble);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

// Spreads the low four bits of `bits` into four all-ones/all-zeros 64-bit lanes.
inline __m256i lane_select(unsigned bits)
{
    const __m256i probe = _mm256_setr_epi64x(1, 2, 4, 8);
    __m256i b = _mm256_set1_epi64x(static_cast<long long>(bits & 15u));
    return _mm256_cmpeq_epi64(_mm256_and_si256(b, probe), probe);
}

}

void masked_degrees(std::span<const VertexSet> rows, VertexSet mask, std::span<std::uint32_t> out)
{
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
    std::size_t v = 0;
    for (; v + 4 <= rows.size(); v += 4) {
        __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(rows.data() + v));
        __m256i c = popcount_epi64(_mm256_and_si256(r, m));
        alignas(32) std::uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), c);
        for (int i = 0; i < 4; ++i)
            out[v + i] = static_cast<std::uint32_t>(lanes[i]);
    }
    for (; v < rows.size(); ++v)
        out[v] = static_cast<std::uint32_t>(_mm_popcnt_u64(rows[v] & mask));
}

std::uint64_t masked_degree_sum(std::span<const VertexSet> rows, VertexSet members, VertexSet mask)
{
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
    __m256i acc = _mm256_setzero_si256();
    std::size_t n = rows.size() < 64 ? rows.size() : 64;
    std::size_t v = 0;
    for (; v + 4 <= n; v += 4) {
        __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(rows.data() + v));
        __m256i sel = lane_select(static_cast<unsigned>(members >> v));
        acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(_mm256_and_si256(r, m), sel)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; v < n; ++v)
        if ((members >> v) & 1u)
            total += _mm_popcnt_u64(rows[v] & mask);
    return total;
}

}
