#include <cstdio>

#include "parton/analytic.hpp"
#include "parton/parton_state.hpp"

using namespace parton;

int main() {
    // padic basics
    auto x = parse_qp("12", 3);
    std::printf("v(12 in Q3) = %lld (want 1)\n", x.valuation());
    auto h = parse_qp("1/2", 2);
    std::printf("v(1/2 in Q2) = %lld (want -1), norm %.3f\n", h.valuation(), h.norm());
    auto fmt = format_qp(x);
    auto back = parse_qp(fmt, 3);
    std::printf("roundtrip ok: %d [%s]\n", back == x ? 1 : 0, fmt.c_str());
    std::printf("chi2(1/2) = %.3f (want -1)\n", additive_character(h).real());
    auto seven8 = PadicNumber::from_rational(2, 7, 8);
    std::printf("frac(7/8) = %.5f (want 0.875)\n", seven8.fractional_part().to_double());
    auto inv3 = PadicNumber(2, 3).inverse();
    auto one = inv3 * PadicNumber(2, 3);
    std::printf("3 * 3^-1 = v=%lld digits0=%d (want 0,1)\n", one.valuation(), one.digits()[0]);

    // wavelet values
    auto psi1 = kozyrev_wavelet(2, {0, PExp::zero(), 1});
    std::printf("psi_{0,0,1}(1) = %.4f (want -1)\n", psi1.evaluate(PExp::make(2, 1, 0)).real());
    auto psi310 = kozyrev_wavelet(3, {1, PExp::zero(), 1});
    std::printf("psi3_{1,0,1}(0) = %.6f (want %.6f)\n", psi310.evaluate(PExp::zero()).real(),
                1.0 / std::sqrt(3.0));

    // orthonormality quick
    auto psiA = kozyrev_wavelet(2, {0, PExp::zero(), 1});
    auto psiB = kozyrev_wavelet(2, {1, PExp::zero(), 1});
    std::printf("<A,A>=%.12f <A,B>=%.2e\n",
                inner_product(psiA, psiA, Measure::additive).real(),
                std::abs(inner_product(psiA, psiB, Measure::additive)));
    std::printf("mod ortho <bpsiA,bpsiA>_dx* = %.12f\n",
                inner_product(psiA, psiA, Measure::multiplicative, 1.0).real());

    // integrate zeta_p
    std::printf("zeta_p check p=2 s=2: %.2e\n", zeta_p_integral_check(2, 2.0));

    // vladimirov
    std::printf("vlad eig (2,1,1): %.2e\n", vladimirov_eigencheck(2, 1, {1.0, 0.0}));
    std::printf("vlad eig (3,0,2): %.2e\n", vladimirov_eigencheck(3, 0, {2.0, 0.0}));
    std::printf("vlad eig (2,-2,2): %.2e\n", vladimirov_eigencheck(2, -2, {2.0, 0.0}));

    // c_p arithmetic: p=2, s=2, l=0 -> -1/3
    std::printf("c_2(0,2) = %.6f (want -0.333333)\n", cp_kozyrev(2, 0, {2.0, 0.0}).real());

    // closed form vs ball sum
    for (long long ell = 0; ell < 3; ++ell) {
        auto w = kozyrev_wavelet(3, {1, PExp::zero(), 1});
        cplx s{0.8, 0.6};
        cplx exact = mellin_transform(w, s, ell);
        cplx closed = wavelet_mellin_closed_form(3, 1, s, ell, WaveletVariant::kozyrev);
        std::printf("mellin p3 l=%lld diff %.2e\n", ell, std::abs(exact - closed));
    }
    // modified closed form via weight trick
    {
        auto w = kozyrev_wavelet(5, {0, PExp::zero(), 1});
        cplx s{0.3, 0.4};
        cplx exact = mellin_transform(w, s + cplx{0.5, 0.0}, 2);
        cplx closed = wavelet_mellin_closed_form(5, 0, s, 2, WaveletVariant::modified);
        std::printf("modified mellin diff %.2e\n", std::abs(exact - closed));
        auto mw = modified_wavelet(5, {0, PExp::zero(), 1});
        cplx viaRep = mellin_transform(mw, s, 2);
        std::printf("modified rep mellin diff %.2e\n", std::abs(viaRep - closed));
    }

    // inverse round trip
    {
        long long p = 2;
        int n = 1;
        auto g = [&](long long ell, cplx s) {
            return wavelet_mellin_closed_form(p, n, s, ell, WaveletVariant::kozyrev);
        };
        auto psi = kozyrev_wavelet(p, {n, PExp::zero(), 1});
        double worst = 0.0;
        for (int ve = -2; ve <= 3; ++ve) {
            PExp xx = PExp::make(p, 1, ve);
            cplx inv = inverse_mellin(p, g, xx, 256, 1.0);
            worst = std::max(worst, std::abs(inv - psi.evaluate(xx)));
        }
        std::printf("inverse mellin roundtrip worst %.2e\n", worst);
    }

    // unitarity
    std::printf("unitarity p=7 t=0: %.2e\n", std::abs(cp_unitarity_sum(7, {0.0, 0.0}) - 1.0));
    std::printf("unitarity p=2 t=0.7: %.2e\n", std::abs(cp_unitarity_sum(2, {0.0, 0.7}) - 1.0));
    {
        cplx s{0.3, 0.9};
        std::printf("unitarity off-axis diff %.2e\n",
                    std::abs(cp_unitarity_sum(5, s) - cp_unitarity_closed_expression(5, s)));
    }

    // tau
    auto tau = ramanujan_tau_table(100);
    std::printf("tau(2)=%s tau(3)=%s tau(4)=%s (want -24 252 -1472)\n",
                int128_to_string(tau[2]).c_str(), int128_to_string(tau[3]).c_str(),
                int128_to_string(tau[4]).c_str());

    // dirichlet
    auto chars5 = characters_mod(5);
    std::printf("#chars mod 5 = %zu (want 4)\n", chars5.size());
    for (auto& c : chars5)
        std::printf("  label %lld: chi(2) = %.3f%+.3fi eps=%d prim=%d\n", c.label(),
                    c.value(2).real(), c.value(2).imag(), parity_epsilon(c), is_primitive(c) ? 1 : 0);
    auto quad5 = [&]() -> DirichletCharacter {
        for (auto& c : chars5)
            if (!c.is_principal() && std::abs(c.value(2).real() + 1.0) < 1e-9) return c;
        throw std::logic_error("no quadratic");
    }();
    std::printf("gauss(quad5) = %.6f (want %.6f)\n", gauss_sum(quad5).real(), std::sqrt(5.0));

    // stream / parton
    auto ts = CoefficientStream::tau_stream(200);
    std::printf("stream tau(4) = %.1f, tau(6) = %.1f (want -1472, -6048)\n",
                ts.coefficient(4).real(), ts.coefficient(6).real());
    auto st = decompose(ts, 2, 12, false);
    auto hk = hecke_apply(st, HeckeVariant::I);
    std::printf("hecke I residual: %.2e\n", hk.eigen_residual);
    auto str = decompose(ts, 2, 12, true);
    auto hk2 = hecke_apply(str, HeckeVariant::II);
    std::printf("hecke II residual: %.2e\n", hk2.eigen_residual);

    std::printf("parseval I  (tau p2 M10): %.3e\n",
                parseval_check(decompose(ts, 2, 10, false), decompose(ts, 2, 10, false),
                               HeckeVariant::I));
    std::printf("parseval II (tau p2 M10): %.3e\n",
                parseval_check(decompose(ts, 2, 10, true), decompose(ts, 2, 10, true),
                               HeckeVariant::II));

    std::printf("euler-mellin check tau {2,3} s=8: %.3e\n",
                finite_euler_mellin_check(ts, {2, 3}, {1, 1}, {8.0, 0.0}, 40));

    // inner product I at k=1: exact == diagonal
    auto pd = CoefficientStream::product_dirichlet(chars5[1]);
    auto fpd = decompose(pd, 2, 8, false);
    auto ip = inner_product_I(fpd, fpd);
    std::printf("IP_I k=1 integral %.6f diag %.6f\n", ip.integral.real(), ip.diagonal_form.real());

    // analytic: theta S-transform
    std::printf("theta S residual quad5 y=0.7: %.2e\n", theta_s_transform_residual(0.7, quad5));
    std::printf("K0 quad vs series x=0.8: %.2e\n",
                std::abs(bessel_k0(0.8) - bessel_k0_series(0.8)));
    std::printf("K0 quad vs asympt x=20: %.2e rel\n",
                std::abs(bessel_k0(20.0) - bessel_k0_asymptotic(20.0)) / bessel_k0(20.0));
    return 0;
}
