#include <doctest.h>

#include <vector>

#include "iqs/kern.hpp"
#include "oracles.hpp"

using namespace iqs;

namespace {

// runs fn under both dispatch levels and checks the results agree
template <typename Fn>
void for_each_level(Fn fn) {
    const kern::Level saved = kern::active_level();
    kern::force_level(kern::Level::scalar);
    fn();
#ifdef __x86_64__
    if (kern::detect_level() == kern::Level::avx2) {
        kern::force_level(kern::Level::avx2);
        fn();
    }
#endif
    kern::force_level(saved);
}

} // namespace

TEST_CASE("butterfly stages match their definitions on both lanes") {
    for (std::size_t n : {2ul, 8ul, 64ul, 256ul}) {
        for (std::size_t h = 1; h < n; h <<= 1) {
            const auto base = oracle::random_rvector(n);
            for_each_level([&] {
                std::vector<double> zeta = base, moe = base, had = base, ban = base;
                kern::zeta_stage(zeta.data(), n, h);
                kern::moebius_stage(moe.data(), n, h);
                kern::hadamard_stage(had.data(), n, h);
                kern::banzhaf_stage(ban.data(), n, h);
                const double s = 1.0 / std::sqrt(2.0);
                for (std::size_t blk = 0; blk < n; blk += 2 * h) {
                    for (std::size_t j = 0; j < h; ++j) {
                        const double lo = base[blk + j], hi = base[blk + h + j];
                        CHECK(zeta[blk + j] == lo);
                        CHECK(zeta[blk + h + j] == hi + lo);
                        CHECK(moe[blk + j] == lo);
                        CHECK(moe[blk + h + j] == hi - lo);
                        CHECK(had[blk + j] == doctest::Approx((lo + hi) * s).epsilon(1e-14));
                        CHECK(had[blk + h + j] == doctest::Approx((lo - hi) * s).epsilon(1e-14));
                        CHECK(ban[blk + j] == doctest::Approx((lo + hi) * 0.5).epsilon(1e-14));
                        CHECK(ban[blk + h + j] == hi - lo);
                    }
                }
            });
        }
    }
}

TEST_CASE("dot products and axpy agree across lanes, tails included") {
    for (std::size_t n : {1ul, 2ul, 3ul, 7ul, 16ul, 33ul, 128ul}) {
        const auto a = oracle::random_cvector(n);
        const auto b = oracle::random_cvector(n);
        const auto ra = oracle::random_rvector(n);
        const auto rb = oracle::random_rvector(n);
        const cplx alpha(0.37, -1.21);

        const cplx dc_ref = kern::ref::dotc(a.data(), b.data(), n);
        const cplx du_ref = kern::ref::dotu(a.data(), b.data(), n);
        const double d_ref = kern::ref::dot(ra.data(), rb.data(), n);
        std::vector<cplx> y_ref(n, cplx(0.5, -0.5));
        kern::ref::axpy(alpha, a.data(), y_ref.data(), n);

        for_each_level([&] {
            CHECK(std::abs(kern::dotc(a.data(), b.data(), n) - dc_ref) < 1e-12 * (1.0 + std::abs(dc_ref)));
            CHECK(std::abs(kern::dotu(a.data(), b.data(), n) - du_ref) < 1e-12 * (1.0 + std::abs(du_ref)));
            CHECK(kern::dot(ra.data(), rb.data(), n) == doctest::Approx(d_ref).epsilon(1e-13));
            std::vector<cplx> y(n, cplx(0.5, -0.5));
            kern::axpy(alpha, a.data(), y.data(), n);
            CHECK(oracle::max_abs_diff(y, y_ref) < 1e-13);
        });
    }
}

TEST_CASE("dot kernels match naive accumulation") {
    const std::size_t n = 53;
    const auto a = oracle::random_cvector(n);
    const auto b = oracle::random_cvector(n);
    cplx expect_c = 0.0, expect_u = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        expect_c += std::conj(a[i]) * b[i];
        expect_u += a[i] * b[i];
    }
    for_each_level([&] {
        CHECK(std::abs(kern::dotc(a.data(), b.data(), n) - expect_c) < 1e-12);
        CHECK(std::abs(kern::dotu(a.data(), b.data(), n) - expect_u) < 1e-12);
    });
}

TEST_CASE("level plumbing") {
    CHECK(std::string(kern::level_name(kern::Level::scalar)) == "scalar");
    CHECK(std::string(kern::level_name(kern::Level::avx2)) == "avx2");
    // detect_level never reports something the CPU cannot run
    const kern::Level level = kern::detect_level();
    CHECK((level == kern::Level::scalar || level == kern::Level::avx2));
}
