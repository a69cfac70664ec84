#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "parton/wavelet.hpp"

using namespace parton;
using Catch::Approx;

TEST_CASE("Kozyrev wavelet pointwise values", "[wavelets]") {
    auto psi = kozyrev_wavelet(2, {0, PExp::zero(), 1});
    CHECK(psi.evaluate(PExp::make(2, 1, 0)).real() == Approx(-1.0));

    auto psi3 = kozyrev_wavelet(3, {1, PExp::zero(), 1});
    CHECK(psi3.evaluate(PExp::zero()).real() == Approx(1.0 / std::sqrt(3.0)));

    // outside the support ball the function vanishes: |p^n x - m| > 1
    CHECK(psi3.evaluate(PExp::make(3, 1, -2)) == cplx{0.0, 0.0});

    CHECK_THROWS_AS(kozyrev_wavelet(3, {0, PExp::zero(), 3}), std::invalid_argument);
    CHECK_THROWS_AS(kozyrev_wavelet(3, {0, PExp::zero(), 0}), std::invalid_argument);
}

TEST_CASE("modified wavelet carries the |x|^{1/2} weight", "[wavelets]") {
    auto bpsi = modified_wavelet(2, {0, PExp::zero(), 1});
    CHECK(bpsi.evaluate(PExp::make(2, 1, 0)).real() == Approx(-1.0));  // |1| = 1

    auto psi = kozyrev_wavelet(2, {0, PExp::zero(), 1});
    PExp xhalf = PExp::make(2, 1, 1);  // |x| = 1/2
    CHECK(bpsi.evaluate(xhalf).real() ==
          Approx((1.0 / std::sqrt(2.0)) * psi.evaluate(xhalf).real()));

    // the origin is excluded from the support list
    CHECK(bpsi.evaluate(PExp::zero()) == cplx{0.0, 0.0});
    for (const auto& pc : bpsi.pieces()) CHECK_FALSE(pc.ball.contains_zero());
}

TEST_CASE("exact integration of ball functions", "[wavelets]") {
    SchwartzFunction zp(2, {{Ball::make(2, PExp::zero(), 0), cplx{1.0, 0.0}}});
    // measure of Z_2 with |x|^{s-1}, s = 1
    CHECK(integrate(zp, Measure::additive, 0.0).real() == Approx(1.0));
    // (p/(p-1)) int |x|^{s-1} dx = 1/(1-p^{-s}) at p=2, s=2
    CHECK((2.0 * integrate(zp, Measure::additive, 1.0)).real() == Approx(4.0 / 3.0));

    // wavelets integrate to zero by phase cancellation; oracle is the direct
    // piece-by-piece ball sum
    for (long long p : {2LL, 5LL}) {
        for (int j = 1; j < p; ++j) {
            auto psi = kozyrev_wavelet(p, {1, PExp::zero(), j});
            cplx manual = 0.0;
            for (const auto& pc : psi.pieces()) manual += pc.value * dpow(p, pc.ball.radius_exp);
            CHECK(std::abs(integrate(psi, Measure::additive)) < 1e-15);
            CHECK(std::abs(manual) < 1e-15);
        }
    }

    // divergent shell sums are reported, not truncated
    CHECK_THROWS_AS(integrate(zp, Measure::multiplicative, 0.0), DivergentIntegral);
    CHECK_THROWS_AS(integrate(zp, Measure::additive, -1.0), DivergentIntegral);
}

TEST_CASE("integration is invariant under refinement", "[wavelets]") {
    for (long long p : {2LL, 3LL}) {
        auto f = kozyrev_wavelet(p, {1, PExp::zero(), 1});
        cplx i0 = integrate(f, Measure::additive, 0.7);
        cplx ip0 = inner_product(f, f, Measure::additive);
        for (int lv = 1; lv <= 4; ++lv) {
            auto g = f.refined(lv);
            CHECK(std::abs(integrate(g, Measure::additive, 0.7) - i0) < 1e-14);
            CHECK(std::abs(inner_product(g, f, Measure::additive) - ip0) < 1e-14);
        }
    }
}

TEST_CASE("orthonormality relations", "[wavelets]") {
    auto a = kozyrev_wavelet(2, {0, PExp::zero(), 1});
    auto b = kozyrev_wavelet(2, {1, PExp::zero(), 1});
    CHECK(std::abs(inner_product(a, a, Measure::additive) - 1.0) < 1e-14);
    CHECK(std::abs(inner_product(a, b, Measure::additive)) < 1e-14);
    // <bpsi_n, bpsi_n'> under d*x via the weight identity
    CHECK(std::abs(inner_product(a, a, Measure::multiplicative, 1.0) - 1.0) < 1e-14);
    CHECK(std::abs(inner_product(b, a, Measure::multiplicative, 1.0)) < 1e-14);
    // and through the truncated modified representation
    auto ma = modified_wavelet(2, {0, PExp::zero(), 1});
    auto mb = modified_wavelet(2, {1, PExp::zero(), 1});
    CHECK(std::abs(inner_product(ma, ma, Measure::multiplicative) - 1.0) < 1e-12);
    CHECK(std::abs(inner_product(ma, mb, Measure::multiplicative)) < 1e-12);
}

TEST_CASE("Gamma_p shell sum and analytic tail", "[wavelets]") {
    // convergent side: direct 40-shell summation
    cplx a1{-2.0, 0.6};
    CHECK(std::abs(vladimirov_gamma_minus(2, a1) - oracles::gamma_minus_shell_sum(2, a1, 40)) <
          1e-12);
    cplx a2{-1.0, 0.0};
    CHECK(std::abs(vladimirov_gamma_minus(3, a2) - oracles::gamma_minus_shell_sum(3, a2, 60)) <
          1e-12);
    // doubling the cutoff no longer moves the value
    CHECK(std::abs(oracles::gamma_minus_shell_sum(2, a1, 40) -
                   oracles::gamma_minus_shell_sum(2, a1, 80)) < 1e-14);
}

TEST_CASE("Vladimirov derivative on wavelets", "[wavelets]") {
    // D^1 psi2_{1,0,1} = psi (eigenvalue p^{alpha(1-n)} = 1)
    auto psi = kozyrev_wavelet(2, {1, PExp::zero(), 1});
    auto dpsi = vladimirov_apply(psi, {1.0, 0.0});
    for (size_t i = 0; i < dpsi.pieces().size(); ++i)
        CHECK(std::abs(dpsi.pieces()[i].value - psi.pieces()[i].value) < 1e-10);

    // D^2 psi3_{0,0,1} = 9 psi
    CHECK(vladimirov_eigencheck(3, 0, {2.0, 0.0}) < 1e-10);
    CHECK(vladimirov_eigencheck(5, 0, {0.5, 0.0}) < 1e-8);
    CHECK(vladimirov_eigencheck(2, -2, {2.0, 0.0}) < 1e-8);

    // zero function stays zero
    SchwartzFunction z(3, {{Ball::make(3, PExp::zero(), 1), cplx{0.0, 0.0}}});
    auto dz = vladimirov_apply(z, {1.0, 0.0});
    for (const auto& pc : dz.pieces()) CHECK(std::abs(pc.value) == 0.0);

    // translated and phase-shifted wavelets are eigenfunctions too
    auto psit = kozyrev_wavelet(3, {1, PExp::make(3, 2, -1), 2});
    auto dpsit = vladimirov_apply(psit, {1.0, 0.0});
    cplx lambda = wavelet_eigenvalue(3, 1, {1.0, 0.0});
    for (size_t i = 0; i < dpsit.pieces().size(); ++i)
        CHECK(std::abs(dpsit.pieces()[i].value - lambda * psit.pieces()[i].value) < 1e-10);
}

TEST_CASE("vladimirov tail divergence is reported", "[wavelets]") {
    auto psi = kozyrev_wavelet(2, {0, PExp::zero(), 1});
    CHECK_THROWS_AS(vladimirov_apply(psi, {-0.5, 0.0}, TailPolicy::error_on_divergence),
                    DivergentIntegral);
}

TEST_CASE("serialization records", "[wavelets]") {
    auto psi = kozyrev_wavelet(2, {1, PExp::zero(), 1});
    auto rows = to_records(psi);
    REQUIRE(rows.size() == psi.pieces().size());
    for (const auto& r : rows) CHECK(r.radius_exp == 0);
}
