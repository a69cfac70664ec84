#pragma once

#include <map>
#include <mutex>

#include "dirichlet.hpp"

namespace parton {

struct MissingSeed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using int128 = __int128;

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

// ---------------------------------------------------------------------------
// Ramanujan tau via the eta-product expansion: tau(n) is the q^n coefficient
// of q * prod_{m>=1} (1-q^m)^{24}, computed with exact 128-bit integers.
// Each factor uses the pentagonal-number expansion of prod (1-q^m).

inline std::vector<int128> ramanujan_tau_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
    int len = n_max;  // coefficients of q^0..q^{n_max-1} of prod(1-q^m)^24
    // sparse pentagonal series: exponent k(3k-1)/2, sign (-1)^k
    std::vector<std::pair<int, int>> pent;
    for (long long k = 0;; ++k) {
        long long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 >= len && g2 >= len) break;
        int sgn = (k % 2 == 0) ? 1 : -1;
        if (g1 < len) pent.emplace_back(static_cast<int>(g1), sgn);
        if (k > 0 && g2 < len) pent.emplace_back(static_cast<int>(g2), sgn);
    }
    std::vector<int128> poly(static_cast<size_t>(len), 0), tmp(static_cast<size_t>(len), 0);
    poly[0] = 1;
    for (int pass = 0; pass < 24; ++pass) {
        std::fill(tmp.begin(), tmp.end(), 0);
        for (auto [g, sgn] : pent)
            for (int i = 0; i + g < len; ++i)
                tmp[static_cast<size_t>(i + g)] += sgn * poly[static_cast<size_t>(i)];
        poly.swap(tmp);
    }
    std::vector<int128> tau(static_cast<size_t>(n_max) + 1, 0);
    for (int n = 1; n <= n_max; ++n) tau[static_cast<size_t>(n)] = poly[static_cast<size_t>(n - 1)];
    return tau;
}

// a(p^m) by the weight-k recursion over exact integers (chi = 1 streams)
inline std::vector<int128> prime_power_recursion_exact(int128 ap, int128 p_pow_k1, int M) {
    std::vector<int128> a(static_cast<size_t>(M) + 1);
    a[0] = 1;
    if (M >= 1) a[1] = ap;
    for (int m = 1; m < M; ++m)
        a[static_cast<size_t>(m) + 1] =
            ap * a[static_cast<size_t>(m)] - p_pow_k1 * a[static_cast<size_t>(m) - 1];
    return a;
}

// tau(n) from seeds tau(p) only, multiplicativity plus the recursion
inline int128 tau_from_recursion(long long n, const std::vector<int128>& tau_table) {
    int128 out = 1;
    for (auto [p, e] : factorize(n)) {
        if (p >= static_cast<long long>(tau_table.size()))
            throw MissingSeed("tau seed table too short");
        int128 pk1 = 1;
        for (int i = 0; i < 11; ++i) pk1 *= p;
        auto loc = prime_power_recursion_exact(tau_table[static_cast<size_t>(p)], pk1, e);
        out *= loc[static_cast<size_t>(e)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multiplicative coefficient streams a : N -> C determined by weight k,
// nebentypus chi(p) and seeds a(p), extended by
//   a(p^{m+1}) = a(p) a(p^m) - chi(p) p^{k-1} a(p^{m-1})
// and a(mn) = a(m) a(n) on coprime arguments.

class CoefficientStream {
public:
    enum class Kind { cuspform, product_dirichlet, custom };

    static CoefficientStream tau_stream(long long seed_prime_limit = 10000) {
        CoefficientStream s;
        s.kind_ = Kind::cuspform;
        s.k_ = 12;
        s.tau_ = std::make_shared<std::vector<int128>>(
            ramanujan_tau_table(static_cast<int>(seed_prime_limit)));
        return s;
    }

    static CoefficientStream product_dirichlet(const DirichletCharacter& nu) {
        if (nu.is_principal())
            throw std::invalid_argument("product-Dirichlet stream needs a nonprincipal character");
        CoefficientStream s;
        s.kind_ = Kind::product_dirichlet;
        s.k_ = 1;
        s.nu_ = std::make_shared<DirichletCharacter>(nu);
        return s;
    }

    static CoefficientStream custom(int weight, std::map<long long, cplx> seeds,
                                    std::map<long long, cplx> nebentypus) {
        CoefficientStream s;
        s.kind_ = Kind::custom;
        s.k_ = weight;
        s.seeds_ = std::move(seeds);
        s.chi_ = std::move(nebentypus);
        return s;
    }

    Kind kind() const { return kind_; }
    int weight() const { return k_; }

    bool has_seed(long long p) const {
        switch (kind_) {
            case Kind::cuspform: return p < static_cast<long long>(tau_->size());
            case Kind::product_dirichlet: return true;
            case Kind::custom: return seeds_.count(p) > 0;
        }
        return false;
    }

    cplx seed(long long p) const {
        switch (kind_) {
            case Kind::cuspform:
                if (!has_seed(p)) throw MissingSeed("no tau seed for prime " + std::to_string(p));
                return cplx(static_cast<double>((*tau_)[static_cast<size_t>(p)]), 0.0);
            case Kind::product_dirichlet: {
                cplx v = nu_->value(p);
                return v + std::conj(v);  // 2 cos(arg nu(p)), or 0 at p | N
            }
            case Kind::custom: {
                auto it = seeds_.find(p);
                if (it == seeds_.end())
                    throw MissingSeed("no seed for prime " + std::to_string(p));
                return it->second;
            }
        }
        throw std::logic_error("unreachable");
    }

    cplx nebentypus(long long p) const {
        switch (kind_) {
            case Kind::cuspform: return {1.0, 0.0};
            case Kind::product_dirichlet: return std::norm(nu_->value(p)) > 0.5
                                                     ? cplx{1.0, 0.0}
                                                     : cplx{0.0, 0.0};
            case Kind::custom: {
                auto it = chi_.find(p);
                return it == chi_.end() ? cplx{0.0, 0.0} : it->second;
            }
        }
        throw std::logic_error("unreachable");
    }

    const DirichletCharacter* character() const { return nu_ ? nu_.get() : nullptr; }

    cplx prime_power(long long p, int m) const {
        if (m == 0) return {1.0, 0.0};
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = memo_.find({p, m});
            if (it != memo_.end()) return it->second;
        }
        cplx ap = seed(p);
        cplx cp = nebentypus(p) * dpow(p, k_ - 1);
        std::vector<cplx> a(static_cast<size_t>(m) + 1);
        a[0] = 1.0;
        a[1] = ap;
        for (int i = 1; i < m; ++i)
            a[static_cast<size_t>(i) + 1] = ap * a[static_cast<size_t>(i)] - cp * a[static_cast<size_t>(i) - 1];
        std::lock_guard<std::mutex> lock(memo_mutex_);
        for (int i = 0; i <= m; ++i) memo_[{p, i}] = a[static_cast<size_t>(i)];
        return a[static_cast<size_t>(m)];
    }

    cplx coefficient(long long n) const {
        if (n < 1) throw std::invalid_argument("coefficient index must be positive");
        cplx out = 1.0;
        for (auto [p, e] : factorize(n)) out *= prime_power(p, e);
        return out;
    }

private:
    CoefficientStream() = default;

    Kind kind_ = Kind::custom;
    int k_ = 1;
    std::shared_ptr<std::vector<int128>> tau_;
    std::shared_ptr<DirichletCharacter> nu_;
    std::map<long long, cplx> seeds_;
    std::map<long long, cplx> chi_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<long long, int>, cplx> memo_;

public:
    CoefficientStream(const CoefficientStream& o)
        : kind_(o.kind_), k_(o.k_), tau_(o.tau_), nu_(o.nu_), seeds_(o.seeds_), chi_(o.chi_) {
        std::lock_guard<std::mutex> lock(o.memo_mutex_);
        memo_ = o.memo_;
    }
    CoefficientStream& operator=(const CoefficientStream&) = delete;
};

// ---------------------------------------------------------------------------

// Chebyshev polynomials of the second kind, U_0 = 1, U_1 = 2 xi,
// U_{n+1} = 2 xi U_n - U_{n-1}
inline double chebyshev_u(int n, double xi) {
    if (n < 0) throw std::invalid_argument("chebyshev_u: n >= 0 required");
    double um1 = 1.0, u = 2.0 * xi;
    if (n == 0) return um1;
    for (int i = 1; i < n; ++i) {
        double next = 2.0 * xi * u - um1;
        um1 = u;
        u = next;
    }
    return u;
}

// a(n) = sum_{d|n} nu(d) conj(nu)(n/d) for n <= n_max, by a divisor sieve;
// this is the oracle side of the character-convolution coefficients
inline std::vector<cplx> convolution_coeffs(const DirichletCharacter& nu, long long n_max) {
    if (nu.is_principal())
        throw std::invalid_argument("convolution coefficients need a nonprincipal character");
    std::vector<cplx> a(static_cast<size_t>(n_max) + 1, cplx{0.0, 0.0});
    for (long long d = 1; d <= n_max; ++d) {
        cplx vd = nu.value(d);
        if (vd == cplx{0.0, 0.0}) continue;
        for (long long m = 1; d * m <= n_max; ++m) {
            cplx vm = std::conj(nu.value(m));
            if (vm != cplx{0.0, 0.0}) a[static_cast<size_t>(d * m)] += vd * vm;
        }
    }
    return a;
}

// single-slot cache for the sieve above; the L-routes and the waveform sums
// ask for the same table many times in a row
inline std::shared_ptr<const std::vector<cplx>> convolution_coeffs_cached(
    const DirichletCharacter& nu, long long n_max) {
    static std::mutex mu;
    static long long key_N = -1, key_label = -1, key_nmax = -1;
    static std::shared_ptr<const std::vector<cplx>> slot;
    std::lock_guard<std::mutex> lock(mu);
    if (nu.modulus() != key_N || nu.label() != key_label || n_max > key_nmax) {
        slot = std::make_shared<const std::vector<cplx>>(convolution_coeffs(nu, n_max));
        key_N = nu.modulus();
        key_label = nu.label();
        key_nmax = n_max;
    }
    return slot;
}

// prediction side: a(n) = prod_p U_{n_p}(cos arg nu(p)); zero when a prime
// dividing the modulus appears in n
inline cplx chebyshev_prediction(const DirichletCharacter& nu, long long n) {
    double out = 1.0;
    for (auto [p, e] : factorize(n)) {
        cplx v = nu.value(p);
        if (std::norm(v) < 0.5) return {0.0, 0.0};
        out *= chebyshev_u(e, v.real());  // |nu(p)| = 1, so Re = cos(arg)
    }
    return {out, 0.0};
}

struct BoundReport {
    double max_ratio = 0.0;
    long long worst_prime = 0;
    long long primes_checked = 0;
};

// max over primes <= limit of |a(p)| / p^{(k-1)/2}
inline BoundReport coefficient_bound_check(const CoefficientStream& stream, long long prime_limit) {
    BoundReport r;
    for (long long p : primes_up_to(prime_limit)) {
        if (!stream.has_seed(p)) break;
        double ratio = std::abs(stream.seed(p)) / dpow(p, (stream.weight() - 1) / 2.0);
        ++r.primes_checked;
        if (ratio > r.max_ratio) {
            r.max_ratio = ratio;
            r.worst_prime = p;
        }
    }
    return r;
}

}  // namespace parton
