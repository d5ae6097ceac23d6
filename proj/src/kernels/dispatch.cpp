#include <ramseylab/kernels.hpp>

#include <atomic>

namespace ramseylab::kernels {

namespace {

bool cpu_has_avx2()
{
#if defined(RAMSEYLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

std::atomic<Isa> & active()
{
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}

}

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

Isa detected_isa()
{
    static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa)
{
    if (isa == Isa::avx2 && detected_isa() != Isa::avx2)
        isa = Isa::scalar;
    active().store(isa, std::memory_order_relaxed);
}

void masked_degrees(std::span<const VertexSet> rows, VertexSet mask, std::span<std::uint32_t> out)
{
#ifdef RAMSEYLAB_HAVE_AVX2
    if (active_isa() == Isa::avx2)
        return avx2::masked_degrees(rows, mask, out);
#endif
    scalar::masked_degrees(rows, mask, out);
}

std::uint64_t masked_degree_sum(std::span<const VertexSet> rows, VertexSet members, VertexSet mask)
{
#ifdef RAMSEYLAB_HAVE_AVX2
    if (active_isa() == Isa::avx2)
        return avx2::masked_degree_sum(rows, members, mask);
#endif
    return scalar::masked_degree_sum(rows, members, mask);
}

}
