#pragma once

#include <functional>

#include "quad.hpp"
#include "wavelet.hpp"

namespace parton {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WaveletVariant { kozyrev, modified };

inline constexpr double kPoleRadius = 1e-8;

// c_p(l,s) = -1/(p(1-p^{-s})) + delta_{l,0}/(p^s-1) + delta_{l,p-1}: the
// scale-independent factor of the wavelet Mellin transform, written from the
// explicit delta expression.
inline cplx cp_kozyrev(long long p, long long ell, cplx s) {
    if (ell < 0 || ell >= p) throw std::invalid_argument("character index out of range");
    cplx psm1 = cpowm1(p, s);  // p^s - 1
    if (std::abs(psm1) < kPoleRadius) throw PoleError("c_p pole: p^s = 1");
    cplx v = 1.0 / (static_cast<double>(p) * cpowm1(p, -s));  // -1/(p(1-p^{-s}))
    if (ell == 0) v += 1.0 / psm1;
    if (ell == p - 1) v += 1.0;
    return v;
}

// bold c_p(l,s) = c_p(l, s + 1/2): same structure for the |x|^{1/2}-weighted
// wavelets
inline cplx cp_modified(long long p, long long ell, cplx s) {
    return cp_kozyrev(p, ell, s + cplx{0.5, 0.0});
}

inline cplx wavelet_mellin_closed_form(long long p, int n, cplx s, long long ell,
                                       WaveletVariant variant) {
    if (variant == WaveletVariant::kozyrev)
        return cp_kozyrev(p, ell, s) * cpow(p, static_cast<double>(n) * (s - 0.5));
    return cp_modified(p, ell, s) * cpow(p, static_cast<double>(n) * s);
}

// M_{(p,omega_l)}[f](s) = int d*x omega_l(x) |x|^s f(x), as an exact
// ball-and-shell sum.  omega_l(x) = e^{2 pi i l d0(x)/p} with d0 the leading
// digit, constant on every ball not containing 0; balls containing 0 sum the
// digit average (p delta_{l,0} - 1)/p against a geometric shell series.
inline cplx mellin_transform(const SchwartzFunction& f, cplx s, long long ell) {
    long long p = f.prime();
    if (ell < 0 || ell >= p) throw std::invalid_argument("character index out of range");
    cplx total = 0.0;
    for (const auto& pc : f.pieces()) {
        if (pc.value == cplx{0.0, 0.0}) continue;
        const Ball& b = pc.ball;
        if (!b.contains_zero()) {
            int v = b.center.valuation();
            cplx omega = unit_phase(static_cast<double>(ell * b.center.leading_digit(p) % p) / p);
            double mult_measure = dpow(p, b.radius_exp + v);
            total += pc.value * omega * cpow(p, -static_cast<double>(v) * s) * mult_measure;
        } else {
            if (s.real() <= 0.0)
                throw DivergentIntegral("Mellin shell series diverges for Re(s) <= 0");
            double digit_avg_re = (ell == 0) ? (p - 1.0) / p : -1.0 / p;
            // shells |x| = p^r, r <= radius_exp
            cplx geom = cpow(p, static_cast<double>(b.radius_exp) * s) / (-cpowm1(p, -s));
            total += pc.value * digit_avg_re * geom;
        }
    }
    return total;
}

// Inverse transform along Re(s) = sigma > 0:
//   sum_l e^{-2 pi i l d0(x)/p} (ln p / 2 pi) int_0^{2 pi/ln p} dt
//          |x|^{-sigma-it} g(l, sigma+it).
// The integrand is periodic in t; an equal-weight rule with quadrature_points
// nodes is used and checked by doubling.
inline cplx inverse_mellin(long long p, const std::function<cplx(long long, cplx)>& transform,
                           int x_norm_exponent, int x_leading_digit, int quadrature_points = 256,
                           double sigma = 1.0) {
    if (sigma <= 0.0) throw std::invalid_argument("inverse contour needs sigma > 0");
    double period = kTwoPi / std::log(static_cast<double>(p));
    auto level = [&](int q) {
        cplx acc = 0.0;
        double h = period / q;
        for (int k = 0; k < q; ++k) {
            double t = k * h;
            cplx s{sigma, t};
            // |x|^{-s} with |x| = p^{x_norm_exponent}
            cplx xw = cpow(p, -static_cast<double>(x_norm_exponent) * s);
            cplx inner = 0.0;
            for (long long ell = 0; ell < p; ++ell) {
                cplx omega_conj = unit_phase(-static_cast<double>(ell * x_leading_digit % p) / p);
                inner += omega_conj * transform(ell, s);
            }
            acc += xw * inner;
        }
        return acc * (h / period);  // (ln p / 2 pi) * h = 1/q
    };
    cplx v1 = level(quadrature_points);
    cplx v2 = level(2 * quadrature_points);
    if (std::abs(v1 - v2) > 1e-8 * (1.0 + std::abs(v2)))
        throw QuadratureFailure("inverse Mellin quadrature order insufficient");
    return v2;
}

inline cplx inverse_mellin(long long p, const std::function<cplx(long long, cplx)>& transform,
                           const PExp& x, int quadrature_points = 256, double sigma = 1.0) {
    if (x.is_zero()) throw std::invalid_argument("inverse Mellin evaluated off Q_p^x only");
    return inverse_mellin(p, transform, -x.valuation(), x.leading_digit(p), quadrature_points,
                          sigma);
}

// sum_l |bold c_p(l, s)|^2; equals 1 on the axis Re(s) = 0 and
// 1 + (1-|p^s|^2)/|p^{s+1/2}-1|^2 in general.
inline double cp_unitarity_sum(long long p, cplx s) {
    double acc = 0.0;
    for (long long ell = 0; ell < p; ++ell) acc += std::norm(cp_modified(p, ell, s));
    return acc;
}

inline double cp_unitarity_closed_expression(long long p, cplx s) {
    double ps2 = std::norm(cpow(p, s));
    double denom = std::norm(cpow(p, s + cplx{0.5, 0.0}) - 1.0);
    return 1.0 + (1.0 - ps2) / denom;
}

}  // namespace parton
