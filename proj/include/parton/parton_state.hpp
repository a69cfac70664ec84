#pragma once

#include "coeffs.hpp"
#include "mellin.hpp"

namespace parton {

struct TruncationExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// truncated local state {c_0..c_M} at a prime: c_m = a(p^m), optionally
// rescaled by p^{-(k-1)m/2}
struct PartonState {
    long long p = 2;
    int M = 0;
    bool rescaled = false;
    int weight = 1;
    cplx chi_p{1.0, 0.0};
    cplx ap{0.0, 0.0};  // seed a(p) of the originating stream
    std::vector<cplx> coeffs;  // size M+1
    bool tail_flag = false;    // an operator moved mass across the cutoff

    static PartonState zero(long long p, int M, int weight, bool rescaled) {
        PartonState s;
        s.p = p;
        s.M = M;
        s.weight = weight;
        s.rescaled = rescaled;
        s.coeffs.assign(static_cast<size_t>(M) + 1, cplx{0.0, 0.0});
        return s;
    }
};

inline PartonState decompose(const CoefficientStream& stream, long long p, int M,
                             bool rescaled = false) {
    PartonState s;
    s.p = p;
    s.M = M;
    s.rescaled = rescaled;
    s.weight = stream.weight();
    s.chi_p = stream.nebentypus(p);
    s.ap = stream.seed(p);
    s.coeffs.resize(static_cast<size_t>(M) + 1);
    for (int m = 0; m <= M; ++m) {
        cplx c = stream.prime_power(p, m);
        if (rescaled) c *= dpow(p, -0.5 * (stream.weight() - 1) * m);
        s.coeffs[static_cast<size_t>(m)] = c;
    }
    return s;
}

// product over prime factors of n of the stored c_{n_p}
inline cplx reconstruct(const std::map<long long, PartonState>& states, long long n) {
    if (n < 1) throw std::invalid_argument("reconstruct: n must be positive");
    cplx out{1.0, 0.0};
    for (auto [p, e] : factorize(n)) {
        auto it = states.find(p);
        if (it == states.end())
            throw MissingSeed("no local state at prime " + std::to_string(p));
        const PartonState& s = it->second;
        if (s.rescaled) throw std::invalid_argument("reconstruct expects un-rescaled states");
        if (e > s.M)
            throw TruncationExceeded("exponent " + std::to_string(e) + " exceeds truncation at p=" +
                                     std::to_string(p));
        out *= s.coeffs[static_cast<size_t>(e)];
    }
    return out;
}

enum class LadderDirection { raise, lower };

// raise: c'_{m+1} = c_m with c'_0 = 0 (a_- in the ket picture); lower drops
// c_0 (a_+ annihilates the mother wavelet).  Either way the cutoff entry is
// only partially determined, which sets tail_flag.
inline PartonState ladder(const PartonState& s, LadderDirection dir) {
    PartonState out = s;
    if (dir == LadderDirection::raise) {
        for (int m = s.M; m >= 1; --m) out.coeffs[static_cast<size_t>(m)] = s.coeffs[static_cast<size_t>(m) - 1];
        out.coeffs[0] = {0.0, 0.0};
        out.tail_flag = out.tail_flag || std::abs(s.coeffs[static_cast<size_t>(s.M)]) > 0.0;
    } else {
        for (int m = 0; m < s.M; ++m) out.coeffs[static_cast<size_t>(m)] = s.coeffs[static_cast<size_t>(m) + 1];
        out.coeffs[static_cast<size_t>(s.M)] = {0.0, 0.0};
        out.tail_flag = true;  // entry M would need c_{M+1}
    }
    return out;
}

enum class HeckeVariant { I, II };

struct HeckeResult {
    PartonState state;
    double eigen_residual;  // relative sup-norm over interior indices 0..M-1
};

// T(p) = a_+ + chi(p) p^{k-1} a_-  (variant I, un-rescaled states)
// T(p) = a_+ + chi(p) a_-          (variant II, rescaled states)
// eigenvalues a(p) and p^{-(k-1)/2} a(p)
inline HeckeResult hecke_apply(const PartonState& s, HeckeVariant variant) {
    if (variant == HeckeVariant::I && s.rescaled)
        throw std::invalid_argument("variant I acts on un-rescaled states");
    if (variant == HeckeVariant::II && !s.rescaled)
        throw std::invalid_argument("variant II acts on rescaled states");
    cplx lower_coef = (variant == HeckeVariant::I) ? s.chi_p * dpow(s.p, s.weight - 1) : s.chi_p;
    PartonState out = s;
    out.tail_flag = true;  // index M misses the c_{M+1} contribution
    for (int m = 0; m <= s.M; ++m) {
        cplx up = (m + 1 <= s.M) ? s.coeffs[static_cast<size_t>(m) + 1] : cplx{0.0, 0.0};
        cplx down = (m >= 1) ? s.coeffs[static_cast<size_t>(m) - 1] : cplx{0.0, 0.0};
        out.coeffs[static_cast<size_t>(m)] = up + lower_coef * down;
    }
    cplx lambda = (variant == HeckeVariant::I) ? s.ap : s.ap * dpow(s.p, -0.5 * (s.weight - 1));
    double num = 0.0, den = 0.0;
    for (int m = 0; m < s.M; ++m) {  // interior indices only
        cplx want = lambda * s.coeffs[static_cast<size_t>(m)];
        num = std::max(num, std::abs(out.coeffs[static_cast<size_t>(m)] - want));
        den = std::max(den, std::abs(want));
    }
    return {std::move(out), num / std::max(1.0, den)};
}

// ---------------------------------------------------------------------------
// q-series with the coefficient-level U/V/T operators; the independent oracle
// for the ladder realization of T(p)

struct QSeries {
    int N = 0;                 // truncation: coefficients a(0)..a(N)
    std::vector<cplx> a;

    static QSeries from_stream(const CoefficientStream& stream, int N) {
        QSeries q;
        q.N = N;
        q.a.assign(static_cast<size_t>(N) + 1, cplx{0.0, 0.0});
        for (int n = 1; n <= N; ++n) q.a[static_cast<size_t>(n)] = stream.coefficient(n);
        return q;
    }
};

enum class QSeriesOp { U, V, T };

inline QSeries uv_on_qseries(const QSeries& f, long long m, QSeriesOp op, int k = 0,
                             cplx chi_p = cplx{0.0, 0.0}) {
    if (m < 1) throw std::invalid_argument("operator index must be >= 1");
    QSeries out;
    switch (op) {
        case QSeriesOp::V: {  // b(mn) = a(n)
            out.N = f.N;
            out.a.assign(static_cast<size_t>(f.N) + 1, cplx{0.0, 0.0});
            for (long long n = 1; m * n <= f.N; ++n)
                out.a[static_cast<size_t>(m * n)] = f.a[static_cast<size_t>(n)];
            break;
        }
        case QSeriesOp::U: {  // b(n) = a(mn)
            out.N = static_cast<int>(f.N / m);
            out.a.assign(static_cast<size_t>(out.N) + 1, cplx{0.0, 0.0});
            for (long long n = 1; n <= out.N; ++n)
                out.a[static_cast<size_t>(n)] = f.a[static_cast<size_t>(m * n)];
            break;
        }
        case QSeriesOp::T: {  // b(n) = a(pn) + chi(p) p^{k-1} a(n/p)
            out.N = static_cast<int>(f.N / m);
            out.a.assign(static_cast<size_t>(out.N) + 1, cplx{0.0, 0.0});
            cplx c = chi_p * dpow(m, k - 1);
            for (long long n = 1; n <= out.N; ++n) {
                cplx b = f.a[static_cast<size_t>(m * n)];
                if (n % m == 0) b += c * f.a[static_cast<size_t>(n / m)];
                out.a[static_cast<size_t>(n)] = b;
            }
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inner products on local states

inline SchwartzFunction state_function(const PartonState& s) {
    return kozyrev_combination(s.p, s.coeffs);
}

struct InnerProductI {
    cplx integral;       // int_{Q_p^x} dx |x|^{k-1} conj(f) g, exact ball sum
    cplx diagonal_form;  // sum_m p^{(k-1)(1-m)} conj(c_f) c_g
};

// Petersson-like pairing.  The additive-measure weight |x|^{k-1} dx is the
// normalization under which the ladder adjoints come out as
// a_+^dag = p^{k-1} a_-; at k = 1 the weighted wavelet pairs are orthonormal
// and the two fields agree exactly.
inline InnerProductI inner_product_I(const PartonState& f, const PartonState& g) {
    if (f.p != g.p) throw PrimeMismatch("inner_product_I: prime mismatch");
    if (f.rescaled || g.rescaled)
        throw std::invalid_argument("inner_product_I expects un-rescaled states");
    if (f.weight != g.weight) throw std::invalid_argument("weights differ");
    int k = f.weight;
    SchwartzFunction F = state_function(f), G = state_function(g);
    InnerProductI out;
    out.integral = inner_product(F, G, Measure::additive, static_cast<double>(k - 1));
    cplx diag = 0.0;
    for (int m = 0; m <= std::min(f.M, g.M); ++m)
        diag += dpow(f.p, (k - 1.0) * (1.0 - m)) * std::conj(f.coeffs[static_cast<size_t>(m)]) *
                g.coeffs[static_cast<size_t>(m)];
    out.diagonal_form = diag;
    return out;
}

struct InnerProductII {
    cplx value;                       // sum_m conj(c_f) c_g over the window
    cplx integral;                    // the same quantity as an exact d*x integral
    std::vector<cplx> partial_sums;   // running sums, for divergence classification
};

inline InnerProductII inner_product_II(const PartonState& f, const PartonState& g) {
    if (f.p != g.p) throw PrimeMismatch("inner_product_II: prime mismatch");
    if (!f.rescaled || !g.rescaled)
        throw std::invalid_argument("inner_product_II expects rescaled states");
    InnerProductII out;
    int M = std::min(f.M, g.M);
    out.partial_sums.reserve(static_cast<size_t>(M) + 1);
    cplx acc = 0.0;
    for (int m = 0; m <= M; ++m) {
        acc += std::conj(f.coeffs[static_cast<size_t>(m)]) * g.coeffs[static_cast<size_t>(m)];
        out.partial_sums.push_back(acc);
    }
    out.value = acc;
    // d*x overlap of the |x|^{1/2}-weighted combinations, via the weight trick
    SchwartzFunction F = state_function(f), G = state_function(g);
    out.integral = inner_product(F, G, Measure::multiplicative, 1.0);
    return out;
}

// ---------------------------------------------------------------------------
// Mellin side

// M[f_(p)](s) = c_p(l,s) sum_m c_m p^{(1-m)(s-1/2)}   (un-rescaled)
// M[f_(p)](s) = bold c_p(l,s) sum_m c_m p^{(1-m)s}    (rescaled)
inline cplx parton_mellin(const PartonState& s, cplx sv, long long ell) {
    cplx pref = s.rescaled ? cp_modified(s.p, ell, sv) : cp_kozyrev(s.p, ell, sv);
    cplx expo = s.rescaled ? sv : sv - cplx{0.5, 0.0};
    cplx sum = 0.0;
    for (int m = 0; m <= s.M; ++m)
        sum += s.coeffs[static_cast<size_t>(m)] * cpow(s.p, expo * static_cast<double>(1 - m));
    return pref * sum;
}

inline cplx euler_local_factor(const CoefficientStream& stream, long long p, cplx s) {
    cplx ap = stream.seed(p);
    cplx chi = stream.nebentypus(p);
    cplx den = 1.0 - ap * cpow(p, -s) + chi * dpow(p, stream.weight() - 1) * cpow(p, -2.0 * s);
    return 1.0 / den;
}

// | prod_p M[f_(p)](s)  -  (prod_p c_p(l_p,s) p^{s-1/2}) prod_p L_p(s-1/2) |
inline double finite_euler_mellin_check(const CoefficientStream& stream,
                                        const std::vector<long long>& primes,
                                        const std::vector<long long>& ells, cplx s, int M = 40) {
    if (primes.size() != ells.size())
        throw std::invalid_argument("one character index per prime required");
    cplx lhs{1.0, 0.0}, pref{1.0, 0.0}, lfac{1.0, 0.0};
    for (size_t i = 0; i < primes.size(); ++i) {
        PartonState st = decompose(stream, primes[i], M, false);
        lhs *= parton_mellin(st, s, ells[i]);
        pref *= cp_kozyrev(primes[i], ells[i], s) * cpow(primes[i], s - cplx{0.5, 0.0});
        lfac *= euler_local_factor(stream, primes[i], s - cplx{0.5, 0.0});
    }
    return std::abs(lhs - pref * lfac);
}

// ---------------------------------------------------------------------------
// Parseval-type identities: quadrature of Mellin transforms along the
// critical segment against the direct evaluation.

// variant I  (Kozyrev side, un-rescaled states, k >= 2):
//   sum_l (ln p/2pi) int dt conj(M_f((k-1)/2+it)) M_g((k-1)/2+it)
//     =  int d*x |x|^{k-1} conj(f) g
// variant II (modified side, rescaled states):
//   sum_l (ln p/2pi) int dt conj(M_f(it)) M_g(it)  =  sum_m conj(c_f) c_g
inline double parseval_check(const PartonState& f, const PartonState& g, HeckeVariant variant,
                             int quadrature_points = 256) {
    if (f.p != g.p) throw PrimeMismatch("parseval_check: prime mismatch");
    long long p = f.p;
    double sigma;
    cplx rhs;
    if (variant == HeckeVariant::I) {
        if (f.rescaled || g.rescaled)
            throw std::invalid_argument("variant I uses un-rescaled states");
        if (f.weight < 2)
            throw std::invalid_argument("variant I quadrature needs weight >= 2 (contour sigma > 0)");
        sigma = 0.5 * (f.weight - 1);
        rhs = inner_product(state_function(f), state_function(g), Measure::multiplicative,
                            static_cast<double>(f.weight - 1));
    } else {
        if (!f.rescaled || !g.rescaled)
            throw std::invalid_argument("variant II uses rescaled states");
        sigma = 0.0;
        rhs = 0.0;
        for (int m = 0; m <= std::min(f.M, g.M); ++m)
            rhs += std::conj(f.coeffs[static_cast<size_t>(m)]) * g.coeffs[static_cast<size_t>(m)];
    }
    double period = kTwoPi / std::log(static_cast<double>(p));
    auto integrand = [&](double t) {
        cplx s{sigma, t};
        cplx acc = 0.0;
        for (long long ell = 0; ell < p; ++ell)
            acc += std::conj(parton_mellin(f, s, ell)) * parton_mellin(g, s, ell);
        return acc;
    };
    cplx lhs = periodic_quadrature(integrand, period, 1e-12, quadrature_points) / period;
    return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Divergence dichotomy for the formal orthogonality claims: diagonal partial
// sums grow without bound, off-diagonal ones admit the explicit bound derived
// from the Chebyshev product-to-sum identity whenever both angles are
// nondegenerate.

struct DichotomyReport {
    std::vector<int> windows;
    std::vector<double> abs_sums;       // |S_M| at each window
    std::vector<double> doubling_ratios;  // |S_{2M}|/|S_M|
    bool diagonal = false;
    bool bound_applicable = false;
    double bound = std::numeric_limits<double>::infinity();
    double max_abs_partial = 0.0;
    bool within_bound = false;
    bool divergent_by_ratio = false;  // every doubling grew by >= 1.5
};

inline DichotomyReport dichotomy_report(const DirichletCharacter& nu_f,
                                        const DirichletCharacter& nu_g, long long p,
                                        const std::vector<int>& windows) {
    cplx vf = nu_f.value(p), vg = nu_g.value(p);
    if (std::norm(vf) < 0.5 || std::norm(vg) < 0.5)
        throw std::invalid_argument("dichotomy needs p coprime to the modulus");
    double cf = vf.real(), cg = vg.real();
    DichotomyReport rep;
    rep.windows = windows;
    rep.diagonal = std::abs(cf - cg) < 1e-12;
    double tf = std::acos(std::clamp(cf, -1.0, 1.0));
    double tg = std::acos(std::clamp(cg, -1.0, 1.0));
    double sf = std::sin(tf), sg = std::sin(tg);
    if (!rep.diagonal && std::abs(sf * sg) > 1e-9) {
        double d = 0.5 * (tf - tg), s = 0.5 * (tf + tg);
        rep.bound = (1.0 / std::abs(std::sin(d)) + 1.0 / std::abs(std::sin(s))) /
                    (2.0 * std::abs(sf * sg));
        rep.bound_applicable = true;
    }
    int mmax = *std::max_element(windows.begin(), windows.end());
    double acc = 0.0;
    std::vector<double> at_window;
    size_t wi = 0;
    std::vector<int> sorted = windows;
    std::sort(sorted.begin(), sorted.end());
    for (int m = 0; m <= mmax; ++m) {
        acc += chebyshev_u(m, cf) * chebyshev_u(m, cg);
        rep.max_abs_partial = std::max(rep.max_abs_partial, std::abs(acc));
        while (wi < sorted.size() && sorted[wi] == m) {
            at_window.push_back(std::abs(acc));
            ++wi;
        }
    }
    rep.abs_sums = at_window;
    rep.divergent_by_ratio = at_window.size() >= 2;
    for (size_t i = 1; i < at_window.size(); ++i) {
        double r = at_window[i] / std::max(at_window[i - 1], 1e-300);
        rep.doubling_ratios.push_back(r);
        if (r < 1.5) rep.divergent_by_ratio = false;
    }
    rep.within_bound = rep.bound_applicable && rep.max_abs_partial <= rep.bound;
    return rep;
}

}  // namespace parton
