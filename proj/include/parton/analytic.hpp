#pragma once

#include "coeffs.hpp"
#include "quad.hpp"
#include "schwartz.hpp"

namespace parton {

struct AbscissaViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LValue {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
};

enum class LMethod { direct, euler };

namespace detail {
inline double character_partial_sum_bound(const DirichletCharacter& chi) {
    // partial sums of a nonprincipal character are periodic with mean zero;
    // the max over one period bounds them all
    double acc_re = 0.0, acc_im = 0.0, best = 0.0;
    for (long long n = 1; n <= chi.modulus(); ++n) {
        cplx v = chi.value(n);
        acc_re += v.real();
        acc_im += v.imag();
        best = std::max(best, std::hypot(acc_re, acc_im));
    }
    return best;
}
}  // namespace detail

// L(s,chi) by truncated series or truncated Euler product, with a certified
// tail bound.  For the trivial modulus the direct route optionally completes
// the tail with the Euler-Maclaurin integral term.
inline LValue dirichlet_l(const DirichletCharacter& chi, cplx s, LMethod method,
                          long long limit, bool complete_tail = false) {
    double sigma = s.real();
    if (sigma <= 1.0)
        throw AbscissaViolation("direct evaluation needs Re(s) > 1");
    LValue out;
    if (method == LMethod::direct) {
        cplx sum = 0.0;
        for (long long n = limit; n >= 1; --n) {  // ascending magnitudes
            cplx v = chi.value(n);
            if (v != cplx{0.0, 0.0}) sum += v * std::exp(-s * std::log(static_cast<double>(n)));
        }
        double T = static_cast<double>(limit);
        if (chi.is_principal()) {
            if (complete_tail) {
                if (chi.modulus() != 1)
                    throw std::invalid_argument("tail completion implemented for modulus 1 only");
                sum += std::pow(T, 1.0 - s.real()) *
                           std::exp(cplx{0.0, -s.imag() * std::log(T)}) / (s - 1.0) +
                       0.5 * std::exp(-s * std::log(T));
                out.tail_bound = std::abs(s) * std::pow(T, -sigma - 1.0);
            } else {
                out.tail_bound = std::pow(T, 1.0 - sigma) / (sigma - 1.0) + std::pow(T, -sigma);
            }
        } else {
            double c = detail::character_partial_sum_bound(chi);
            out.tail_bound = c * std::pow(T, -sigma) * (1.0 + std::abs(s) / sigma);
        }
        out.value = sum;
        return out;
    }
    // Euler product over p <= limit
    cplx prod{1.0, 0.0};
    auto primes = cached_primes(limit);
    for (long long p : *primes) {
        if (p > limit) break;
        cplx v = chi.value(p);
        prod /= (1.0 - v * std::exp(-s * std::log(static_cast<double>(p))));
    }
    out.value = prod;
    double P = static_cast<double>(limit);
    // |log of the omitted factors| <= sum_{p>P} p^{-sigma} (1 + o(1))
    double logtail = 2.0 * std::pow(P, 1.0 - sigma) / ((sigma - 1.0) * std::log(P));
    out.tail_bound = std::abs(prod) * (std::exp(logtail) - 1.0);
    return out;
}

// residual of zeta_p(s) = (p/(p-1)) int_{Z_p} |x|^{s-1} dx against the closed
// form, plus the multiplicative-measure variant; both integrals exact
inline double zeta_p_integral_check(long long p, double s) {
    if (s <= 0.0) throw AbscissaViolation("needs Re(s) > 0");
    SchwartzFunction zp(p, {{Ball::make(p, PExp::zero(), 0), cplx{1.0, 0.0}}});
    double pref = static_cast<double>(p) / (p - 1.0);
    cplx add = pref * integrate(zp, Measure::additive, s - 1.0);
    cplx mult = pref * integrate(zp, Measure::multiplicative, s);
    cplx closed = 1.0 / (1.0 - dpow(p, -s));
    return std::max(std::abs(add - closed), std::abs(mult - closed));
}

enum class ProductLMethod { factorized, series, euler };

// 2L(s,nu) = L(s,nu) L(s,nu*): from the factor pair, from the single series
// with convolution coefficients, or from the Euler product of Chebyshev local
// factors.
inline LValue product_l(const DirichletCharacter& nu, cplx s, ProductLMethod method,
                        long long limit) {
    if (nu.is_principal()) throw std::invalid_argument("nonprincipal character required");
    if (s.real() <= 1.0) throw AbscissaViolation("needs Re(s) > 1");
    LValue out;
    switch (method) {
        case ProductLMethod::factorized: {
            LValue a = dirichlet_l(nu, s, LMethod::direct, limit);
            LValue b = dirichlet_l(nu.conjugate(), s, LMethod::direct, limit);
            out.value = a.value * b.value;
            out.tail_bound = a.tail_bound * std::abs(b.value) + b.tail_bound * std::abs(a.value) +
                             a.tail_bound * b.tail_bound;
            return out;
        }
        case ProductLMethod::series: {
            auto ap = convolution_coeffs_cached(nu, limit);
            const auto& a = *ap;
            cplx sum = 0.0;
            for (long long n = limit; n >= 1; --n)
                if (a[static_cast<size_t>(n)] != cplx{0.0, 0.0})
                    sum += a[static_cast<size_t>(n)] * std::exp(-s * std::log(static_cast<double>(n)));
            out.value = sum;
            // |sum_{n<=x} a(n)| = O(c^2 + 2 c sqrt(x)) via the hyperbola split
            double c = detail::character_partial_sum_bound(nu);
            double sigma = s.real(), T = static_cast<double>(limit);
            double amp = 2.0 * c * std::sqrt(T) + c * c;
            out.tail_bound = amp * std::pow(T, -sigma) * (1.0 + 2.0 * std::abs(s) / (2.0 * sigma - 1.0));
            return out;
        }
        case ProductLMethod::euler: {
            cplx prod{1.0, 0.0};
            auto primes = cached_primes(limit);
            for (long long p : *primes) {
                if (p > limit) break;
                cplx v = nu.value(p);
                if (v == cplx{0.0, 0.0}) continue;  // local factor 1 at p | N
                double two_cos = 2.0 * v.real();
                cplx ps = std::exp(-s * std::log(static_cast<double>(p)));
                prod /= (1.0 - two_cos * ps + ps * ps);
            }
            out.value = prod;
            double sigma = s.real(), P = static_cast<double>(limit);
            double logtail = 4.0 * std::pow(P, 1.0 - sigma) / ((sigma - 1.0) * std::log(P));
            out.tail_bound = std::abs(prod) * (std::exp(logtail) - 1.0);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

// the two-character product L(s,nu1) L(s,nu2*); evaluated only, no further
// identities asserted
inline cplx product_l_general(const DirichletCharacter& nu1, const DirichletCharacter& nu2,
                              cplx s, long long limit) {
    LValue a = dirichlet_l(nu1, s, LMethod::direct, limit);
    LValue b = dirichlet_l(nu2.conjugate(), s, LMethod::direct, limit);
    return a.value * b.value;
}

// ---------------------------------------------------------------------------
// Theta series and its S-transform

struct ThetaValue {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
    int terms = 0;
};

// theta(iy,nu) = 2 sum_{n>=1} nu(n) n^eps e^{-pi n^2 y / N}
inline ThetaValue theta_series(double y, const DirichletCharacter& nu,
                               double tail_target = 1e-16) {
    if (y <= 0.0) throw std::invalid_argument("theta needs y > 0");
    if (!is_primitive(nu)) throw std::invalid_argument("theta needs a primitive character");
    long long N = nu.modulus();
    int eps = parity_epsilon(nu);
    ThetaValue out;
    cplx sum = 0.0;
    double q = std::numbers::pi * y / static_cast<double>(N);
    int n = 1;
    for (;; ++n) {
        double term_mag = std::pow(n, eps) * std::exp(-q * n * n);
        if (term_mag < tail_target && n > 2) break;
        if (n > 100000) throw QuadratureFailure("theta truncation runaway");
        sum += nu.value(n) * term_mag;
    }
    out.value = 2.0 * sum;
    out.terms = n;
    out.tail_bound = 4.0 * std::pow(n + 1.0, eps) * std::exp(-q * (n + 1.0) * (n + 1.0));
    return out;
}

// |theta(i/y,nu) - (y^{1/2+eps} / i^eps sqrt(N)) tau(nu) theta(iy,nu*)|
inline double theta_s_transform_residual(double y, const DirichletCharacter& nu) {
    long long N = nu.modulus();
    int eps = parity_epsilon(nu);
    cplx lhs = theta_series(1.0 / y, nu).value;
    cplx i_eps = (eps == 0) ? cplx{1.0, 0.0} : cplx{0.0, 1.0};
    cplx rhs = std::pow(y, 0.5 + eps) / (i_eps * std::sqrt(static_cast<double>(N))) *
               gauss_sum(nu) * theta_series(y, nu.conjugate()).value;
    return std::abs(lhs - rhs);
}

namespace detail {
template <class F>
cplx complex_decaying_integral(F&& f, double a, double panel, double tol) {
    double re = integrate_decaying([&](double x) { return f(x).real(); }, a, panel, tol);
    double im = integrate_decaying([&](double x) { return f(x).imag(); }, a, panel, tol);
    return {re, im};
}
}  // namespace detail

// L(s,nu) as the Mellin transform of the theta series, with the (0,1) part
// folded to (1,inf) by the S-transform so both integrands decay exponentially
inline cplx l_from_theta_mellin(double s, const DirichletCharacter& nu, double tol = 1e-12) {
    if (s <= 1.0) throw AbscissaViolation("needs Re(s) > 1");
    long long N = nu.modulus();
    int eps = parity_epsilon(nu);
    double w = 0.5 * (s + eps);
    cplx i_eps = (eps == 0) ? cplx{1.0, 0.0} : cplx{0.0, 1.0};
    cplx fold = gauss_sum(nu) / (i_eps * std::sqrt(static_cast<double>(N)));
    DirichletCharacter nu_conj = nu.conjugate();
    auto integrand = [&](double y) -> cplx {
        cplx direct = std::pow(y, w - 1.0) * theta_series(y, nu).value;
        cplx folded = fold * std::pow(y, eps - 0.5 - w) * theta_series(y, nu_conj).value;
        return direct + folded;
    };
    cplx integral = detail::complex_decaying_integral(integrand, 1.0, 2.0, tol);
    double pref = std::pow(std::numbers::pi / N, w) / (2.0 * std::tgamma(w));
    return pref * integral;
}

// ---------------------------------------------------------------------------
// K_0 from the convolution identity int_0^inf (dy/y) e^{-a y - b/y}
// = 2 K_0(2 sqrt(ab)), i.e. K_0(x) = int_0^inf e^{-x cosh u} du.

inline double bessel_k0(double x, double tol = 1e-13) {
    if (x <= 0.0) throw std::invalid_argument("K_0 needs x > 0");
    double reach = 45.0;  // e^{-reach} below double noise relative to e^{-x}
    double umax = std::acosh((x + reach) / x);
    auto f = [&](double u) { return std::exp(-x * std::cosh(u)); };
    double scale = std::exp(-x);
    return adaptive_simpson(f, 0.0, umax, tol * std::max(scale, 1e-300));
}

// ascending series, the small-x cross-check
inline double bessel_k0_series(double x) {
    double q = 0.25 * x * x;
    double i0 = 1.0, term = 1.0, corr = 0.0, h = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        i0 += term;
        h += 1.0 / k;
        corr += term * h;
        if (term < 1e-20) break;
    }
    constexpr double euler_gamma = 0.57721566490153286;
    return -(std::log(0.5 * x) + euler_gamma) * i0 + corr;
}

// large-x cross-check, truncated at the smallest term
inline double bessel_k0_asymptotic(double x) {
    double pref = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 40; ++k) {
        double next = term * (-(2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return pref * sum;
}

// int_0^inf y^{w-1} K_0(c y) dy = 2^{w-2} c^{-w} Gamma(w/2)^2
inline double kzero_mellin_closed(double w, double c) {
    double g = std::tgamma(0.5 * w);
    return std::pow(2.0, w - 2.0) * std::pow(c, -w) * g * g;
}

inline double kzero_mellin_quadrature(double w, double c, double tol = 1e-11) {
    // y = e^u; integrand e^{wu} K_0(c e^u) decays like e^{wu} on the left and
    // double-exponentially on the right
    auto f = [&](double u) { return std::exp(w * u) * bessel_k0(c * std::exp(u), 1e-14); };
    double left = 45.0 / w;
    double right = std::log(50.0 / c) + 1.0;
    if (right <= -left) return 0.0;
    return adaptive_simpson(f, -left, right, tol);
}

// residual of the K_0-sum representation of 2L(s,nu) against the factor pair
inline double product_l_bessel_check(double s, const DirichletCharacter& nu, long long n_terms,
                                     long long factor_limit = 200000) {
    if (s <= 1.0) throw AbscissaViolation("needs Re(s) > 1");
    long long N = nu.modulus();
    int eps = parity_epsilon(nu);
    double w = s + eps;
    auto ap = convolution_coeffs_cached(nu, n_terms);
    const auto& a = *ap;
    cplx sum = 0.0;
    for (long long n = 1; n <= n_terms; ++n) {
        if (a[static_cast<size_t>(n)] == cplx{0.0, 0.0}) continue;
        double c = kTwoPi * n / static_cast<double>(N);
        sum += a[static_cast<size_t>(n)] * std::pow(n, eps) * kzero_mellin_closed(w, c);
    }
    double g = std::tgamma(0.5 * w);
    cplx rhs = 4.0 * std::pow(std::numbers::pi / N, w) / (g * g) * sum;
    cplx lhs = product_l(nu, cplx{s, 0.0}, ProductLMethod::factorized, 400000).value;
    (void)factor_limit;
    return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Maass-like waveform built on the convolution coefficients

inline cplx maass_waveform(double x, double y, const DirichletCharacter& nu, long long n_terms) {
    if (y <= 0.0) throw std::invalid_argument("needs y > 0");
    long long N = nu.modulus();
    int eps = parity_epsilon(nu);
    auto ap = convolution_coeffs_cached(nu, n_terms);
    const auto& a = *ap;
    cplx sum = 0.0;
    for (long long n = 1; n <= n_terms; ++n) {
        if (a[static_cast<size_t>(n)] == cplx{0.0, 0.0}) continue;
        double arg = kTwoPi * n * y / static_cast<double>(N);
        if (arg > 700.0) break;
        sum += a[static_cast<size_t>(n)] * std::pow(n * y, eps) * std::sqrt(y) *
               bessel_k0(arg) * unit_phase(static_cast<double>(n) * x / static_cast<double>(N));
    }
    return sum;
}

// mode-n Fourier coefficient of the waveform by an exact periodic rule in x
inline cplx maass_fourier_coefficient(long long n, double y, const DirichletCharacter& nu,
                                      long long n_terms, int grid = 256) {
    long long N = nu.modulus();
    cplx acc = 0.0;
    for (int kk = 0; kk < grid; ++kk) {
        double x = static_cast<double>(N) * kk / grid;
        acc += maass_waveform(x, y, nu, n_terms) *
               unit_phase(-static_cast<double>(n) * x / static_cast<double>(N));
    }
    return acc / static_cast<double>(grid);
}

struct DivergenceProbe {
    std::vector<double> eps;
    std::vector<double> values;        // I(eps)
    std::vector<double> increments;    // I(eps_{j+1}) - I(eps_j)
    std::vector<double> scaled_increments;  // increment / (ln 1/eps)^2
};

// int_eps^{1/eps} (dy/y) K_0(2 pi m y/N) K_0(2 pi n y/N) over a halving eps
// sequence; the integral diverges like (ln 1/eps)^3 / 3, so the per-halving
// increments grow like ln2 (ln 1/eps)^2
inline DivergenceProbe maass_norm_divergence_probe(long long m, long long n, long long N,
                                                   const std::vector<double>& eps_seq) {
    DivergenceProbe out;
    double cm = kTwoPi * m / static_cast<double>(N), cn = kTwoPi * n / static_cast<double>(N);
    auto f = [&](double u) {
        double y = std::exp(u);
        double am = cm * y, an = cn * y;
        if (am > 650.0 || an > 650.0) return 0.0;
        return bessel_k0(am, 1e-11) * bessel_k0(an, 1e-11);
    };
    for (double e : eps_seq) {
        double L = std::log(e);
        double v = adaptive_simpson(f, L, -L, 1e-9);
        if (!out.values.empty()) {
            double inc = v - out.values.back();
            out.increments.push_back(inc);
            double lg = std::log(1.0 / e);
            out.scaled_increments.push_back(inc / (lg * lg));
        }
        out.eps.push_back(e);
        out.values.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Truncated time average of conj(2L_f(1/2+it)) 2L_g(1/2+it); exploratory.
// Coefficients are real, so the integrand's imaginary part is odd in t.

struct TimeAverage {
    cplx value{0.0, 0.0};
    double odd_part_residual = 0.0;
};

inline TimeAverage time_average_inner_product(const DirichletCharacter& nu_f,
                                              const DirichletCharacter& nu_g, double T,
                                              int grid_points, long long n_terms) {
    if (T <= 0.0) throw std::invalid_argument("needs T > 0");
    auto afp = convolution_coeffs_cached(nu_f, n_terms);
    auto af = *afp;
    auto ag = convolution_coeffs(nu_g, n_terms);
    auto dirichlet_poly = [&](const std::vector<cplx>& a, cplx s) {
        cplx acc = 0.0;
        for (long long n = 1; n <= n_terms; ++n)
            if (a[static_cast<size_t>(n)] != cplx{0.0, 0.0})
                acc += a[static_cast<size_t>(n)] * std::exp(-s * std::log(static_cast<double>(n)));
        return acc;
    };
    auto integrand = [&](double t) {
        cplx s{0.5, t};
        return std::conj(dirichlet_poly(af, s)) * dirichlet_poly(ag, s);
    };
    if (grid_points < 3 || grid_points % 2 == 0)
        throw std::invalid_argument("grid_points must be odd and >= 3 (symmetric grid)");
    double h = 2.0 * T / (grid_points - 1);
    cplx acc = 0.0;
    double odd = 0.0;
    std::vector<cplx> vals(static_cast<size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        double t = -T + i * h;
        vals[static_cast<size_t>(i)] = integrand(t);
    }
    for (int i = 0; i < grid_points; ++i) {
        double wgt = (i == 0 || i == grid_points - 1) ? 0.5 : 1.0;
        acc += wgt * vals[static_cast<size_t>(i)];
        int mirror = grid_points - 1 - i;
        odd = std::max(odd, std::abs(vals[static_cast<size_t>(i)].imag() +
                                     vals[static_cast<size_t>(mirror)].imag()));
    }
    TimeAverage out;
    out.value = acc * h / (2.0 * T);
    out.odd_part_residual = odd;
    return out;
}

}  // namespace parton
