#pragma once

#include <functional>

#include "numutil.hpp"

namespace parton {

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Equal-weight rule for periodic integrands over [0, period), doubled until
// two successive levels agree; spectrally accurate for smooth periodic f.
template <class F>
cplx periodic_quadrature(F&& f, double period, double tol = 1e-10, int q0 = 64,
                         int qmax = (1 << 17)) {
    int q = q0;
    double h = period / q;
    cplx sum = 0.0;
    for (int k = 0; k < q; ++k) sum += f(k * h);
    cplx prev = sum * h;
    while (q < qmax) {
        cplx odd = 0.0;
        for (int k = 0; k < q; ++k) odd += f((k + 0.5) * h);
        q *= 2;
        h = period / q;
        cplx cur = prev / 2.0 + odd * h;
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureFailure("periodic quadrature did not converge");
}

namespace detail {
template <class F>
double adaptive_simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0) throw QuadratureFailure("adaptive Simpson recursion exhausted");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}
}  // namespace detail

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-12, int depth = 48) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// integral over [a, infinity) of a decaying integrand: fixed-width panels
// until several in a row are negligible
template <class F>
double integrate_decaying(F&& f, double a, double panel, double tol = 1e-12,
                          int max_panels = 4000) {
    double total = 0.0;
    int quiet = 0;
    for (int i = 0; i < max_panels; ++i) {
        double lo = a + i * panel, hi = lo + panel;
        double part = adaptive_simpson(f, lo, hi, tol);
        total += part;
        if (std::abs(part) < tol * (1.0 + std::abs(total))) {
            if (++quiet >= 3) return total;
        } else {
            quiet = 0;
        }
    }
    throw QuadratureFailure("tail of decaying integral did not settle");
}

}  // namespace parton
