#pragma once

// Independent oracles used by the tests: brute-force summations and
// alternative algebraic routes, deliberately kept apart from the library
// implementations they cross-check.

#include <complex>
#include <random>
#include <vector>

#include "parton/coeffs.hpp"
#include "parton/padic.hpp"

namespace oracles {

using parton::cplx;

// Gamma_(p)(-alpha) by direct shell summation (valid for Re(alpha) < 0):
// shells |x| = p^{-r}, r >= 0 contribute (1-1/p) p^{r alpha}; the shell
// |x| = p contributes -p^{-alpha-1}; all outer shells cancel.
inline cplx gamma_minus_shell_sum(long long p, cplx alpha, int shells) {
    cplx acc = -std::exp(-(alpha + 1.0) * std::log(static_cast<double>(p)));
    for (int r = 0; r < shells; ++r)
        acc += (1.0 - 1.0 / p) * std::exp(alpha * static_cast<double>(r) *
                                          std::log(static_cast<double>(p)));
    return acc;
}

// zeta(2) via the geometrically convergent central-binomial series
// 3 sum_{n>=1} 1/(n^2 binom(2n,n))
inline double zeta2_reference() {
    double sum = 0.0, binom = 2.0;  // binom(2,1)
    for (int n = 1; n < 40; ++n) {
        sum += 1.0 / (static_cast<double>(n) * n * binom);
        binom *= 2.0 * (2 * n + 1) / (n + 1.0);  // binom(2n+2,n+1)
    }
    return 3.0 * sum;
}

// theta value by plain direct summation with a fixed term count
inline cplx theta_direct(double y, const parton::DirichletCharacter& nu, int terms) {
    int eps = parton::parity_epsilon(nu);
    cplx acc = 0.0;
    for (int n = 1; n <= terms; ++n)
        acc += nu.value(n) * std::pow(n, eps) *
               std::exp(-std::numbers::pi * n * static_cast<double>(n) * y / nu.modulus());
    return 2.0 * acc;
}

// U_n(cos theta) = sin((n+1) theta)/sin(theta)
inline double chebyshev_trig(int n, double theta) {
    return std::sin((n + 1) * theta) / std::sin(theta);
}

// coefficients of (1 - a S + c S^2)^{-1} e_0 with S the raising shift,
// expanded as a geometric operator series truncated at M
inline std::vector<cplx> modular_atom_geometric(cplx a, cplx c, int M) {
    std::vector<cplx> total(static_cast<size_t>(M) + 1, 0.0), term(static_cast<size_t>(M) + 1, 0.0);
    term[0] = 1.0;
    total[0] = 1.0;
    for (int j = 1; j <= M; ++j) {
        // term <- (a S - c S^2) term
        std::vector<cplx> next(static_cast<size_t>(M) + 1, 0.0);
        for (int m = 0; m < M; ++m) {
            next[static_cast<size_t>(m) + 1] += a * term[static_cast<size_t>(m)];
            if (m + 2 <= M) next[static_cast<size_t>(m) + 2] -= c * term[static_cast<size_t>(m)];
        }
        term = next;
        for (int m = 0; m <= M; ++m) total[static_cast<size_t>(m)] += term[static_cast<size_t>(m)];
    }
    return total;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

}  // namespace oracles
