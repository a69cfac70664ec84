#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace parton {

using cplx = std::complex<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long long> primes_up_to(long long limit) {
    std::vector<long long> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (long long i = 2; i <= limit; ++i) {
        if (!composite[static_cast<size_t>(i)]) {
            out.push_back(i);
            for (long long j = i * i; j <= limit; j += i)
                composite[static_cast<size_t>(j)] = true;
        }
    }
    return out;
}

// shared sieve; the returned snapshot may extend past the requested limit
inline std::shared_ptr<const std::vector<long long>> cached_primes(long long limit) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<long long>> snapshot;
    static long long covered = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (limit > covered) {
        snapshot = std::make_shared<const std::vector<long long>>(primes_up_to(limit));
        covered = limit;
    }
    return snapshot;
}

// (prime, exponent) pairs, ascending primes.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long long, int>> fac;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            fac.emplace_back(d, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    return fac;
}

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && std::abs(r) > (std::numeric_limits<long long>::max)() / std::abs(b))
            throw std::overflow_error("ipow overflow");
        r *= b;
    }
    return r;
}

// p^e for integer e (possibly negative), as double.
inline double dpow(long long p, double e) { return std::pow(static_cast<double>(p), e); }

// p^s for complex s.
inline cplx cpow(long long p, cplx s) { return std::exp(s * std::log(static_cast<double>(p))); }

// e^z - 1 without cancellation near z = 0
inline cplx cexpm1(cplx z) {
    double re = std::expm1(z.real()) * std::cos(z.imag()) -
                2.0 * std::sin(0.5 * z.imag()) * std::sin(0.5 * z.imag());
    double im = std::exp(z.real()) * std::sin(z.imag());
    return {re, im};
}

// p^s - 1, stable for small |s log p|
inline cplx cpowm1(long long p, cplx s) { return cexpm1(s * std::log(static_cast<double>(p))); }

inline cplx unit_phase(double turns) {  // e^{2 pi i turns}
    return std::polar(1.0, kTwoPi * turns);
}

// Exact rational with 128-bit backing; enough headroom for p^v with
// p <= 13 and |v| <= 32 (fractional parts of p-adics at default precision).
struct Rat {
    __int128 num = 0;
    __int128 den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
    }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }

    Rat mod1() const {  // representative in [0,1)
        __int128 n = num % den;
        if (n < 0) n += den;
        return Rat(n, den);
    }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
    }
};

// Linear grid a..b with n points (n >= 1; n == 1 yields {a}).
inline std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("linspace: need n >= 1");
    std::vector<double> g(static_cast<size_t>(n));
    if (n == 1) { g[0] = a; return g; }
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
    return g;
}

}  // namespace parton
