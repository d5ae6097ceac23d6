#include <ramseylab/kernels.hpp>

#include <doctest.h>

#include <random>
#include <vector>

using namespace ramseylab;

namespace {

struct IsaGuard
{
    kernels::Isa saved = kernels::active_isa();
    ~IsaGuard() { kernels::set_active_isa(saved); }
};

}

TEST_SUITE("kernels")
{
    TEST_CASE("scalar masked degrees are popcounts")
    {
        std::vector<VertexSet> rows{0b1011, 0, ~VertexSet{0}, 0b1000};
        std::vector<std::uint32_t> out(rows.size());
        kernels::scalar::masked_degrees(rows, 0b1010, out);
        CHECK(out == std::vector<std::uint32_t>{2, 0, 2, 1});
        CHECK(kernels::scalar::masked_degree_sum(rows, 0b0101, 0b1010) == 4);
    }

    TEST_CASE("avx2 matches scalar on random rows")
    {
        if (kernels::detected_isa() != kernels::Isa::avx2) {
            MESSAGE("AVX2 not available; only the scalar path is exercised");
            return;
        }
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 2000; ++trial) {
            std::size_t n = rng() % 70;
            std::vector<VertexSet> rows(n);
            for (auto & r : rows)
                r = rng() & rng();
            VertexSet mask = trial % 7 == 0 ? ~VertexSet{0} : rng();
            VertexSet members = rng();
            std::vector<std::uint32_t> a(n), b(n);
            kernels::scalar::masked_degrees(rows, mask, a);
            kernels::avx2::masked_degrees(rows, mask, b);
            CHECK(a == b);
            CHECK(kernels::scalar::masked_degree_sum(rows, members, mask) ==
                  kernels::avx2::masked_degree_sum(rows, members, mask));
        }
    }

    TEST_CASE("dispatch follows the selected variant")
    {
        IsaGuard guard;
        kernels::set_active_isa(kernels::Isa::scalar);
        CHECK(kernels::active_isa() == kernels::Isa::scalar);
        std::vector<VertexSet> rows{0b111, 0b101};
        std::vector<std::uint32_t> out(2);
        kernels::masked_degrees(rows, 0b011, out);
        CHECK(out == std::vector<std::uint32_t>{2, 1});
        kernels::set_active_isa(kernels::Isa::avx2);
        CHECK(kernels::active_isa() == kernels::detected_isa());
        kernels::masked_degrees(rows, 0b011, out);
        CHECK(out == std::vector<std::uint32_t>{2, 1});
        CHECK(kernels::isa_name(kernels::Isa::scalar) == "scalar");
    }
}
