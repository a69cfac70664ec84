#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "parton/mellin.hpp"

using namespace parton;
using Catch::Approx;

TEST_CASE("c_p case split from the explicit delta expression", "[mellin]") {
    // l = 0, p = 2, s = 2: -1/(p(1-p^{-s})) + 1/(p^s-1) = (1-2)/(4-1)
    CHECK(cp_kozyrev(2, 0, {2.0, 0.0}).real() == Approx(-1.0 / 3.0));
    CHECK(cp_kozyrev(2, 0, {2.0, 0.0}).imag() == Approx(0.0));

    // the l = p-1 branch carries the extra +1
    cplx s{1.3, 0.4};
    for (long long p : {3LL, 5LL})
        CHECK(std::abs(cp_kozyrev(p, p - 1, s) - cp_kozyrev(p, 1, s) - 1.0) < 1e-15);

    // scale dependence: value(n+1)/value(n) = p^{s-1/2}
    for (long long p : {2LL, 3LL}) {
        cplx r = wavelet_mellin_closed_form(p, 3, s, 1, WaveletVariant::kozyrev) /
                 wavelet_mellin_closed_form(p, 2, s, 1, WaveletVariant::kozyrev);
        CHECK(std::abs(r - cpow(p, s - cplx{0.5, 0.0})) < 1e-14);
    }

    CHECK_THROWS_AS(cp_kozyrev(2, 0, cplx{0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(cp_kozyrev(2, 1, cplx{0.0, kTwoPi / std::log(2.0)}), PoleError);
}

TEST_CASE("closed form equals the exact ball sum", "[mellin]") {
    cplx s{0.9, 0.7};
    for (long long p : {2LL, 3LL, 5LL}) {
        for (int n : {-1, 0, 1, 2}) {
            auto psi = kozyrev_wavelet(p, {n, PExp::zero(), 1});
            for (long long ell = 0; ell < p; ++ell) {
                cplx exact = mellin_transform(psi, s, ell);
                cplx closed = wavelet_mellin_closed_form(p, n, s, ell, WaveletVariant::kozyrev);
                CHECK(std::abs(exact - closed) <= 1e-12 * std::max(1.0, std::abs(closed)));
                // modified variant through the weight shift and through the
                // truncated representation
                cplx closed_m = wavelet_mellin_closed_form(p, n, s, ell, WaveletVariant::modified);
                CHECK(std::abs(mellin_transform(psi, s + cplx{0.5, 0.0}, ell) - closed_m) <=
                      1e-12 * std::max(1.0, std::abs(closed_m)));
                auto bpsi = modified_wavelet(p, {n, PExp::zero(), 1});
                CHECK(std::abs(mellin_transform(bpsi, s, ell) - closed_m) <=
                      1e-10 * std::max(1.0, std::abs(closed_m)));
            }
        }
    }
}

TEST_CASE("local zeta relation through the multiplicative transform", "[mellin]") {
    // indicator of Z_p \ {0}: (p/(p-1)) M[s, l=0] = zeta_p(s)
    for (long long p : {2LL, 7LL}) {
        SchwartzFunction zp(p, {{Ball::make(p, PExp::zero(), 0), cplx{1.0, 0.0}}});
        for (double s : {1.0, 2.0}) {
            cplx lhs = (static_cast<double>(p) / (p - 1.0)) * mellin_transform(zp, {s, 0.0}, 0);
            CHECK(std::abs(lhs - 1.0 / (1.0 - dpow(p, -s))) < 1e-14);
        }
    }
    // zero function transforms to zero
    SchwartzFunction z(3, {{Ball::make(3, PExp::zero(), 0), cplx{0.0, 0.0}}});
    CHECK(mellin_transform(z, {1.0, 0.3}, 1) == cplx{0.0, 0.0});
    // divergent direction reported
    SchwartzFunction zp2(2, {{Ball::make(2, PExp::zero(), 0), cplx{1.0, 0.0}}});
    CHECK_THROWS_AS(mellin_transform(zp2, {-0.5, 0.0}, 0), DivergentIntegral);
}

TEST_CASE("inverse transform round trips", "[mellin]") {
    struct Case { long long p; int n; };
    for (auto c : {Case{2, 1}, Case{3, 0}}) {
        auto psi = kozyrev_wavelet(c.p, {c.n, PExp::zero(), 1});
        auto g = [&](long long ell, cplx s) {
            return wavelet_mellin_closed_form(c.p, c.n, s, ell, WaveletVariant::kozyrev);
        };
        double worst = 0.0;
        for (int ve = -2; ve <= 2; ++ve) {
            for (long long d = 1; d < c.p; ++d) {
                PExp x = PExp::make(c.p, d, ve);
                worst = std::max(worst,
                                 std::abs(inverse_mellin(c.p, g, x, 256) - psi.evaluate(x)));
            }
        }
        CHECK(worst < 1e-8);
    }
    // zero transform inverts to the zero function
    auto zero = [](long long, cplx) { return cplx{0.0, 0.0}; };
    CHECK(std::abs(inverse_mellin(2, zero, PExp::make(2, 1, 0), 64)) == 0.0);
    // the exact ball-sum transform round-trips as well (not just the closed form)
    auto psi = kozyrev_wavelet(2, {1, PExp::zero(), 1});
    auto gexact = [&](long long ell, cplx s) { return mellin_transform(psi, s, ell); };
    PExp x0 = PExp::make(2, 1, 1);
    CHECK(std::abs(inverse_mellin(2, gexact, x0, 256) - psi.evaluate(x0)) < 1e-10);
}

TEST_CASE("insufficient quadrature order is detected", "[mellin]") {
    // a transform with slowly decaying t-frequencies sampled far too coarsely
    auto g = [](long long ell, cplx s) {
        return wavelet_mellin_closed_form(2, 6, s, ell, WaveletVariant::kozyrev);
    };
    CHECK_THROWS_AS(inverse_mellin(2, g, PExp::make(2, 1, 0), 2, 0.05), QuadratureFailure);
}

TEST_CASE("unitarity of the coefficient family", "[mellin]") {
    CHECK(std::abs(cp_unitarity_sum(2, {0.0, 0.7}) - 1.0) < 1e-12);
    CHECK(std::abs(cp_unitarity_sum(7, {0.0, 0.0}) - 1.0) < 1e-12);
    // off the axis the sum follows the closed expression; oracle is the
    // direct case sum written out independently
    cplx s{0.3, 0.9};
    for (long long p : {2LL, 5LL}) {
        double direct = 0.0;
        for (long long ell = 0; ell < p; ++ell) {
            cplx v = -1.0 / (static_cast<double>(p) * (1.0 - cpow(p, -s - cplx{0.5, 0.0})));
            if (ell == 0) v += 1.0 / (cpow(p, s + cplx{0.5, 0.0}) - 1.0);
            if (ell == p - 1) v += 1.0;
            direct += std::norm(v);
        }
        CHECK(cp_unitarity_sum(p, s) == Approx(direct).epsilon(1e-13));
        CHECK(cp_unitarity_sum(p, s) == Approx(cp_unitarity_closed_expression(p, s)).epsilon(1e-12));
        CHECK(std::abs(cp_unitarity_sum(p, s) - 1.0) > 1e-3);  // genuinely off 1
    }
}

TEST_CASE("scaling law of the transform", "[mellin]") {
    cplx s{1.2, -0.8};
    for (long long p : {2LL, 5LL}) {
        auto f = kozyrev_wavelet(p, {0, PExp::zero(), 1});
        cplx base = mellin_transform(f, s, 1);
        for (int n = -2; n <= 2; ++n) {
            cplx lhs = mellin_transform(f.argument_scaled_by_power(n), s, 1);
            CHECK(std::abs(lhs - cpow(p, s * static_cast<double>(n)) * base) <
                  1e-12 * std::max(1.0, std::abs(base)));
        }
    }
}
