#pragma once

#include "schwartz.hpp"

namespace parton {

// index of psi_{n,m,j}: n is the scale, m a representative of Q_p/Z_p stored
// as an exact p-power rational with negative exponent, j in 1..p-1 the phase
struct WaveletIndex {
    int n = 0;
    PExp m = PExp::zero();
    int j = 1;
};

namespace detail {
inline Rat character_turns(long long p, const PExp& y) {  // {y}_p as a rational
    return y.fractional_part(p);
}
}  // namespace detail

// psi_{n,m,j}(x) = p^{-n/2} e^{(2 pi i / p) j p^n x} Omega(p^n x - m), built as
// the p child cells of its support ball, on each of which the oscillatory
// factor is constant.
inline SchwartzFunction kozyrev_wavelet(long long p, const WaveletIndex& idx) {
    if (idx.j < 1 || idx.j >= p) throw std::invalid_argument("wavelet phase j out of range");
    if (!idx.m.is_zero() && idx.m.exp >= 0)
        throw std::invalid_argument("translation m must lie in Q_p/Z_p (negative exponent)");
    double amp = dpow(p, -idx.n / 2.0);
    PExp supp_center = idx.m.mul_pow(p, -idx.n);
    std::vector<SchwartzFunction::Piece> pieces;
    pieces.reserve(static_cast<size_t>(p));
    for (long long a = 0; a < p; ++a) {
        // p^n x = m + a + p Z_p on this cell; phase = {j(m+a)/p}
        PExp ma = idx.m.add(p, PExp::make(p, a, 0));
        cplx value = amp;
        if (!ma.is_zero()) {
            PExp arg = PExp::make(p, idx.j * ma.unit, ma.exp - 1);  // j(m+a)/p
            value *= unit_phase(detail::character_turns(p, arg).to_double());
        }
        PExp center = supp_center.add(p, PExp::make(p, a, -idx.n));
        pieces.push_back({Ball::make(p, center, idx.n - 1), value});
    }
    return SchwartzFunction(p, std::move(pieces));
}

inline cplx wavelet_value(long long p, const WaveletIndex& idx, const PExp& x) {
    return kozyrev_wavelet(p, idx).evaluate(x);
}

inline int modified_wavelet_default_depth(long long p) {
    return static_cast<int>(std::ceil(16.0 / std::log10(static_cast<double>(p)))) + 1;
}

// bpsi_{n,m,j} = |x|^{1/2} psi_{n,m,j}.  For m != 0 the norm is constant on
// the support.  For m = 0 the representation descends shell by shell; the
// ball at the origin (values O(p^{-depth/2})) is excluded from the support
// list, as the function vanishes at 0.
inline SchwartzFunction modified_wavelet(long long p, const WaveletIndex& idx, int depth = -1) {
    if (depth < 0) depth = modified_wavelet_default_depth(p);
    SchwartzFunction psi = kozyrev_wavelet(p, idx);
    if (!idx.m.is_zero()) {
        double xnorm = idx.m.mul_pow(p, -idx.n).norm(p);  // constant on the support
        return psi.scaled(std::sqrt(xnorm));
    }
    std::vector<SchwartzFunction::Piece> pieces;
    double amp = dpow(p, -idx.n / 2.0);
    for (int s = 0; s < depth; ++s) {
        double scale = amp * dpow(p, (idx.n - s) / 2.0);
        for (long long d = 1; d < p; ++d) {
            cplx phase = (s == 0)
                             ? unit_phase(static_cast<double>(idx.j * d % p) / p)
                             : cplx{1.0, 0.0};
            PExp center = PExp::make(p, d, s - idx.n);
            pieces.push_back({Ball::make(p, center, idx.n - s - 1), scale * phase});
        }
    }
    return SchwartzFunction(p, std::move(pieces));
}

// sum_m coeffs[m] * psi_{1-m,0,1}: the support is p^{-1} Z_p and the function
// is constant on each (shell, leading digit) cell, so the exact piece list is
// (M+1)(p-1)+1 balls.
inline SchwartzFunction kozyrev_combination(long long p, const std::vector<cplx>& coeffs) {
    int M = static_cast<int>(coeffs.size()) - 1;
    if (M < 0) return SchwartzFunction(p);
    std::vector<SchwartzFunction::Piece> pieces;
    cplx interior = 0.0;  // running sum of inner-wavelet constants
    for (int shell = 0; shell <= M; ++shell) {
        // shell |x| = p^{1-shell}: wavelet 1-shell oscillates here, coarser
        // ones are constant, finer ones vanish
        double amp = dpow(p, -(1.0 - shell) / 2.0);
        for (long long d = 1; d < p; ++d) {
            cplx osc = coeffs[static_cast<size_t>(shell)] * amp *
                       unit_phase(static_cast<double>(d % p) / p);
            PExp center = PExp::make(p, d, shell - 1);
            pieces.push_back({Ball::make(p, center, -shell), interior + osc});
        }
        interior += coeffs[static_cast<size_t>(shell)] * amp;
    }
    pieces.push_back({Ball::make(p, PExp::zero(), -M), interior});
    return SchwartzFunction(p, std::move(pieces));
}

// ---------------------------------------------------------------------------
// Vladimirov derivative

enum class TailPolicy { analytic, error_on_divergence };

// Gamma_(p)(-alpha) from its defining shell sum with the geometric part in
// closed form; the closed form continues the sum outside Re(alpha) < 0.
inline cplx vladimirov_gamma_minus(long long p, cplx alpha) {
    // (1 - p^{-alpha-1}) / (1 - p^alpha), stable near alpha = 0
    cplx denom = -cpowm1(p, alpha);
    if (alpha == cplx{0.0, 0.0} || std::abs(denom) == 0.0)
        throw DivergentIntegral("Gamma_p pole: p^alpha = 1");
    return -cpowm1(p, -alpha - 1.0) / denom;
}

inline cplx wavelet_eigenvalue(long long p, int n, cplx alpha) {
    return cpow(p, alpha * static_cast<double>(1 - n));
}

// D^alpha f as the exact kernel integral on f's own pieces.  Cross-cell terms
// have constant kernel by ultrametricity, the same-cell term vanishes for
// locally constant f, and the exterior of the enclosing ball is a geometric
// shell series summed in closed form.
inline SchwartzFunction vladimirov_apply(const SchwartzFunction& f, cplx alpha,
                                         TailPolicy policy = TailPolicy::analytic) {
    long long p = f.prime();
    if (f.empty()) return f;
    if (alpha.real() <= 0.0 && policy == TailPolicy::error_on_divergence)
        throw DivergentIntegral("exterior tail of the Vladimirov kernel diverges");
    SchwartzFunction g = f.tiled();
    const auto& pcs = g.pieces();
    int R = g.enclosing_ball().radius_exp;
    cplx gamma = vladimirov_gamma_minus(p, alpha);
    // sum over shells |y| > p^R of |y|^{-alpha-1} dy
    cplx tail_denom = -cpowm1(p, -alpha);
    if (std::abs(tail_denom) == 0.0)
        throw DivergentIntegral("exterior tail pole: p^alpha = 1");
    cplx exterior = (1.0 - 1.0 / p) * cpow(p, -alpha * static_cast<double>(R + 1)) / tail_denom;

    size_t n = pcs.size();
    std::vector<cplx> out(n, cplx{0.0, 0.0});
    for (size_t i = 0; i < n; ++i) {
        cplx acc = -pcs[i].value * exterior;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            int dist = distance_exponent(p, pcs[i].ball.center, pcs[j].ball.center);
            double mu = dpow(p, pcs[j].ball.radius_exp);
            acc += (pcs[j].value - pcs[i].value) * mu *
                   cpow(p, -(alpha + 1.0) * static_cast<double>(dist));
        }
        out[i] = acc / gamma;
    }
    std::vector<SchwartzFunction::Piece> res;
    res.reserve(n);
    for (size_t i = 0; i < n; ++i) res.push_back({pcs[i].ball, out[i]});
    return SchwartzFunction(p, std::move(res));
}

// max pointwise |D^alpha psi - p^{alpha(1-n)} psi| over the support cells
inline double vladimirov_eigencheck(long long p, int n, cplx alpha) {
    SchwartzFunction psi = kozyrev_wavelet(p, {n, PExp::zero(), 1});
    SchwartzFunction dpsi = vladimirov_apply(psi, alpha);
    cplx lambda = wavelet_eigenvalue(p, n, alpha);
    double worst = 0.0;
    for (const auto& pc : dpsi.pieces()) {
        cplx expect = lambda * psi.evaluate(pc.ball.center);
        worst = std::max(worst, std::abs(pc.value - expect));
    }
    return worst;
}

}  // namespace parton
