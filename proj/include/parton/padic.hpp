#pragma once

#include <cctype>
#include <optional>
#include <sstream>

#include "numutil.hpp"

namespace parton {

struct PrecisionLoss : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrimeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultPrecision = 32;

// Element of Q_p at finite precision: sum of digits[i] * p^(valuation+i),
// digits[0] != 0 unless the element is the tagged zero.  precision() is the
// number of stored digits; arithmetic shrinks it on cancellation and throws
// PrecisionLoss when nothing significant survives.
class PadicNumber {
public:
    PadicNumber(long long prime, long long value, int precision = kDefaultPrecision)
        : p_(check_prime(prime)) {
        from_rational_impl(value, 1, precision);
    }

    static PadicNumber zero(long long prime) {
        PadicNumber x(eIsZeroTag{}, check_prime(prime));
        return x;
    }

    static PadicNumber from_rational(long long prime, long long num, long long den,
                                     int precision = kDefaultPrecision) {
        PadicNumber x(eIsZeroTag{}, check_prime(prime));
        x.from_rational_impl(num, den, precision);
        return x;
    }

    static PadicNumber from_digits(long long prime, long long valuation, std::vector<int> digits) {
        PadicNumber x(eIsZeroTag{}, check_prime(prime));
        if (digits.empty()) return x;
        if (digits.front() == 0) throw std::invalid_argument("leading digit must be nonzero");
        for (int d : digits)
            if (d < 0 || d >= prime) throw std::invalid_argument("digit out of range");
        x.zero_ = false;
        x.v_ = valuation;
        x.digits_ = std::move(digits);
        return x;
    }

    long long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long long valuation() const {
        if (zero_) throw std::domain_error("valuation of zero is +infinity");
        return v_;
    }
    int precision() const { return zero_ ? kDefaultPrecision : static_cast<int>(digits_.size()); }
    const std::vector<int>& digits() const { return digits_; }
    int leading_digit() const { return zero_ ? 0 : digits_.front(); }

    // |x|_p as p^(-v); exact exponent plus convenience forms.
    long long norm_exponent() const { return -valuation(); }
    double norm() const { return zero_ ? 0.0 : dpow(p_, static_cast<double>(-v_)); }
    Rat norm_rational() const {
        if (zero_) return Rat(0);
        __int128 pk = 1;
        for (long long i = 0; i < (v_ < 0 ? -v_ : v_); ++i) pk *= p_;
        return v_ >= 0 ? Rat(1, pk) : Rat(pk, 1);
    }

    PadicNumber operator-() const {
        if (zero_) return *this;
        PadicNumber r(eIsZeroTag{}, p_);
        r.zero_ = false;
        r.v_ = v_;
        r.digits_.resize(digits_.size());
        // -x = complement digits, +1 at the leading position; expansion is
        // infinite, truncated at the stored precision.
        r.digits_[0] = static_cast<int>(p_) - digits_[0];
        for (size_t i = 1; i < digits_.size(); ++i)
            r.digits_[i] = static_cast<int>(p_) - 1 - digits_[i];
        return r;
    }

    PadicNumber operator+(const PadicNumber& o) const {
        require_same_prime(o);
        if (zero_) return o;
        if (o.zero_) return *this;
        long long lo = std::min(v_, o.v_);
        long long hi = std::min(v_ + precision(), o.v_ + o.precision());  // exclusive
        if (hi <= lo) throw PrecisionLoss("operands share no significant window");
        std::vector<int> sum(static_cast<size_t>(hi - lo), 0);
        int carry = 0;
        for (long long pos = lo; pos < hi; ++pos) {
            int s = digit_at(pos) + o.digit_at(pos) + carry;
            carry = s / static_cast<int>(p_);
            sum[static_cast<size_t>(pos - lo)] = s % static_cast<int>(p_);
        }
        size_t lead = 0;
        while (lead < sum.size() && sum[lead] == 0) ++lead;
        if (lead == sum.size())
            throw PrecisionLoss("total cancellation beyond tracked precision");
        PadicNumber r(eIsZeroTag{}, p_);
        r.zero_ = false;
        r.v_ = lo + static_cast<long long>(lead);
        r.digits_.assign(sum.begin() + static_cast<long>(lead), sum.end());
        return r;
    }

    PadicNumber operator-(const PadicNumber& o) const { return *this + (-o); }

    PadicNumber operator*(const PadicNumber& o) const {
        require_same_prime(o);
        if (zero_ || o.zero_) return zero(p_);
        int prec = std::min(precision(), o.precision());
        std::vector<long long> acc(static_cast<size_t>(prec) + 1, 0);
        for (size_t i = 0; i < digits_.size(); ++i) {
            if (static_cast<int>(i) >= prec) break;
            for (size_t j = 0; j < o.digits_.size() && i + j < static_cast<size_t>(prec); ++j)
                acc[i + j] += static_cast<long long>(digits_[i]) * o.digits_[j];
        }
        std::vector<int> dig(static_cast<size_t>(prec), 0);
        long long carry = 0;
        for (int i = 0; i < prec; ++i) {
            long long s = acc[static_cast<size_t>(i)] + carry;
            dig[static_cast<size_t>(i)] = static_cast<int>(s % p_);
            carry = s / p_;
        }
        PadicNumber r(eIsZeroTag{}, p_);
        r.zero_ = false;
        r.v_ = v_ + o.v_;
        r.digits_ = std::move(dig);  // digits_[0] nonzero: product of units is a unit
        return r;
    }

    PadicNumber inverse() const {
        if (zero_) throw std::domain_error("inversion of zero");
        int prec = precision();
        std::vector<int> w(static_cast<size_t>(prec), 0);
        int inv0 = mod_inverse(digits_[0]);
        // digit-by-digit reciprocal of the unit part: sum_i u_i w_{k-i} must
        // match 1,0,0,... with carries
        long long carry = 0;
        for (int k = 0; k < prec; ++k) {
            long long s = carry;
            for (int i = 1; i <= k; ++i)
                if (i < static_cast<int>(digits_.size()))
                    s += static_cast<long long>(digits_[static_cast<size_t>(i)]) *
                         w[static_cast<size_t>(k - i)];
            long long target = (k == 0) ? 1 : 0;
            long long wk = ((target - s) % p_ * inv0 % p_ + p_) % p_;
            w[static_cast<size_t>(k)] = static_cast<int>(wk);
            carry = (s + static_cast<long long>(digits_[0]) * wk - target) / p_;
        }
        PadicNumber r(eIsZeroTag{}, p_);
        r.zero_ = false;
        r.v_ = -v_;
        r.digits_ = std::move(w);
        return r;
    }

    // Fractional part: sum of the digits below p^0, a rational in [0,1).
    Rat fractional_part() const {
        if (zero_) return Rat(0);
        Rat f(0);
        __int128 pk = 1;
        for (long long pos = -1; pos >= v_; --pos) {
            pk *= p_;
            int idx_ll = static_cast<int>(pos - v_);
            if (idx_ll >= 0 && idx_ll < static_cast<int>(digits_.size()))
                f = f + Rat(digits_[static_cast<size_t>(idx_ll)], pk);
        }
        return f.mod1();
    }

    int digit_at(long long pos) const {
        if (zero_) return 0;
        long long idx = pos - v_;
        if (idx < 0 || idx >= static_cast<long long>(digits_.size())) return 0;
        return digits_[static_cast<size_t>(idx)];
    }

    bool operator==(const PadicNumber& o) const {
        if (p_ != o.p_) return false;
        if (zero_ || o.zero_) return zero_ == o.zero_;
        return v_ == o.v_ && digits_ == o.digits_;
    }

private:
    struct eIsZeroTag {};
    PadicNumber(eIsZeroTag, long long prime) : p_(prime) {}

    static long long check_prime(long long p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
        return p;
    }
    void require_same_prime(const PadicNumber& o) const {
        if (p_ != o.p_) throw PrimeMismatch("operands live over different primes");
    }

    int mod_inverse(long long a) const {
        long long t = 0, nt = 1, r = p_, nr = a % p_;
        while (nr) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return static_cast<int>((t % p_ + p_) % p_);
    }

    void from_rational_impl(long long num, long long den, int precision) {
        if (precision < 1) throw std::invalid_argument("precision must be positive");
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (num == 0) { zero_ = true; return; }
        zero_ = false;
        v_ = 0;
        if (den < 0) { num = -num; den = -den; }
        while (num % p_ == 0) { num /= p_; ++v_; }
        while (den % p_ == 0) { den /= p_; --v_; }
        long long inv = [&] {
            long long t = 0, nt = 1, r = p_, nr = den % p_;
            while (nr) {
                long long q = r / nr;
                std::swap(t -= q * nt, nt);
                std::swap(r -= q * nr, nr);
            }
            return (t % p_ + p_) % p_;
        }();
        digits_.clear();
        long long cur = num;
        for (int i = 0; i < precision; ++i) {
            long long d = ((cur % p_) * inv % p_ + p_) % p_;
            digits_.push_back(static_cast<int>(d));
            cur = (cur - d * den) / p_;
        }
    }

    long long p_;
    bool zero_ = true;
    long long v_ = 0;
    std::vector<int> digits_;
};

// ---------------------------------------------------------------------------
// Canonical text format: space-separated digits, highest power first, with a
// point before the negative powers and a "(base p)" suffix.  Rational
// literals "a/b" and plain decimal integers are also accepted.

inline std::string format_qp(const PadicNumber& x) {
    std::ostringstream os;
    if (x.is_zero()) {
        os << "0 (base " << x.prime() << ")";
        return os.str();
    }
    long long v = x.valuation();
    long long top = v + x.precision() - 1;
    long long start = std::max<long long>(top, 0);
    for (long long pos = start; pos >= std::min<long long>(v, 0); --pos) {
        os << x.digit_at(pos);
        if (pos == 0 && v < 0) os << " .";
        if (pos > std::min<long long>(v, 0)) os << ' ';
    }
    os << " (base " << x.prime() << ")";
    return os.str();
}

inline PadicNumber parse_qp(const std::string& text, long long prime,
                            int precision = kDefaultPrecision) {
    if (!is_prime(prime)) throw std::invalid_argument("modulus is not prime");
    std::string s = text;
    auto base_pos = s.find("(base");
    bool digit_form = base_pos != std::string::npos;
    if (digit_form) {
        auto close = s.find(')', base_pos);
        if (close == std::string::npos) throw std::invalid_argument("malformed base suffix");
        long long stated = std::stoll(s.substr(base_pos + 5, close - base_pos - 5));
        if (stated != prime) throw std::invalid_argument("base suffix disagrees with prime");
        s = s.substr(0, base_pos);
    }
    if (!digit_form) {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            long long num = std::stoll(s.substr(0, slash));
            long long den = std::stoll(s.substr(slash + 1));
            return PadicNumber::from_rational(prime, num, den, precision);
        }
        return PadicNumber::from_rational(prime, std::stoll(s), 1, precision);
    }
    // digit expansion, most significant first; "." separates negative powers
    std::vector<std::string> toks;
    std::istringstream is(s);
    for (std::string t; is >> t;) toks.push_back(t);
    if (toks.empty()) throw std::invalid_argument("empty digit expansion");
    long long point = -1;  // index in toks
    std::vector<int> digs;
    for (size_t i = 0; i < toks.size(); ++i) {
        if (toks[i] == ".") {
            if (point >= 0) throw std::invalid_argument("repeated point");
            point = static_cast<long long>(digs.size());
            continue;
        }
        if (prime > 10 && toks[i].size() > 1 && toks.size() == 1)
            throw std::invalid_argument("ambiguous contiguous digits for base > 10");
        for (char c : toks[i]) {
            if (toks[i].size() > 1 && toks.size() > 1) {
                // multi-char token in a spaced expansion: a single digit value
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed digit");
        }
        int d = std::stoi(toks[i]);
        if (d < 0 || d >= prime) throw std::invalid_argument("digit out of range for base");
        digs.push_back(d);
    }
    long long frac_count = point < 0 ? 0 : static_cast<long long>(digs.size()) - point;
    // digs holds most significant first; lowest power = -frac_count
    std::vector<int> asc(digs.rbegin(), digs.rend());
    long long v = -frac_count;
    size_t lead = 0;
    while (lead < asc.size() && asc[lead] == 0) ++lead;
    if (lead == asc.size()) return PadicNumber::zero(prime);
    std::vector<int> trimmed(asc.begin() + static_cast<long>(lead), asc.end());
    return PadicNumber::from_digits(prime, v + static_cast<long long>(lead), std::move(trimmed));
}

// chi_p(x) = e^{2 pi i {x}_p}, the rank-zero additive character.
inline cplx additive_character(const PadicNumber& x) {
    return unit_phase(x.fractional_part().to_double());
}

// Omega(x - x0): 1 on the unit ball around x0.
inline int indicator_omega(const PadicNumber& x, const PadicNumber& center) {
    if (x.prime() != center.prime()) throw PrimeMismatch("indicator: prime mismatch");
    PadicNumber d = [&] {
        if (center.is_zero()) return x;
        if (x.is_zero()) return -center;
        if (x == center) return PadicNumber::zero(x.prime());
        return x - center;
    }();
    if (d.is_zero()) return 1;
    return d.valuation() >= 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Exact p-power rationals u * p^e (p does not divide u).  These are the ball
// centers and sample points of the wavelet calculus: closed under +,-,* and
// exact digit extraction, cheap to compare.

struct PExp {
    long long unit = 0;  // 0 encodes the zero element
    int exp = 0;

    static PExp zero() { return PExp{0, 0}; }
    static PExp make(long long p, long long u, int e) {
        PExp x{u, e};
        x.normalize(p);
        return x;
    }
    void normalize(long long p) {
        if (unit == 0) { exp = 0; return; }
        while (unit % p == 0) { unit /= p; ++exp; }
    }
    bool is_zero() const { return unit == 0; }
    // |x|_p = p^{-valuation}; valuation == exp after normalization.
    int valuation() const {
        if (unit == 0) throw std::domain_error("valuation of zero");
        return exp;
    }
    double norm(long long p) const { return unit == 0 ? 0.0 : dpow(p, -exp); }

    PExp add(long long p, const PExp& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        int e = std::min(exp, o.exp);
        long long a = unit * ipow(p, exp - e);
        long long b = o.unit * ipow(p, o.exp - e);
        return make(p, a + b, e);
    }
    PExp sub(long long p, const PExp& o) const {
        PExp n{-o.unit, o.exp};
        return add(p, n);
    }
    PExp mul_pow(long long /*p*/, int k) const {
        if (is_zero()) return *this;
        return PExp{unit, exp + k};
    }

    // leading digit: coefficient of p^valuation in [0,p)
    int leading_digit(long long p) const {
        if (is_zero()) return 0;
        long long d = unit % p;
        if (d < 0) d += p;
        return static_cast<int>(d);
    }

    // digits at positions exp..exp+count-1 (nonnegative unit assumed canonical)
    std::vector<int> digits(long long p, int count) const {
        std::vector<int> out(static_cast<size_t>(count), 0);
        long long u = unit;
        for (int i = 0; i < count && u != 0; ++i) {
            long long d = u % p;
            if (d < 0) d += p;
            out[static_cast<size_t>(i)] = static_cast<int>(d);
            u = (u - d) / p;
        }
        return out;
    }

    Rat fractional_part(long long p) const {
        if (is_zero() || exp >= 0) return Rat(0);
        __int128 pk = 1;
        for (int i = 0; i < -exp; ++i) pk *= p;
        __int128 u = unit % pk;
        if (u < 0) u += pk;
        return Rat(u, pk);
    }

    bool operator==(const PExp& o) const { return unit == o.unit && exp == o.exp; }
};

inline PadicNumber to_padic(long long p, const PExp& x, int precision = kDefaultPrecision) {
    if (x.is_zero()) return PadicNumber::zero(p);
    long long scale = ipow(p, x.exp < 0 ? -x.exp : 0);
    long long num = x.unit * (x.exp > 0 ? ipow(p, x.exp) : 1);
    return PadicNumber::from_rational(p, num, scale, precision);
}

inline PExp to_pexp(const PadicNumber& x) {
    if (x.is_zero()) return PExp::zero();
    long long u = 0;
    const auto& d = x.digits();
    for (size_t i = d.size(); i-- > 0;) {
        if (std::abs(u) > ((std::numeric_limits<long long>::max)() - d[i]) / x.prime())
            throw std::overflow_error("to_pexp: digit window too wide");
        u = u * x.prime() + d[i];
    }
    return PExp::make(x.prime(), u, static_cast<int>(x.valuation()));
}

// exponent of |a-b|_p, with "minus infinity" encoded as INT_MIN for a == b
inline int distance_exponent(long long p, const PExp& a, const PExp& b) {
    PExp d = a.sub(p, b);
    if (d.is_zero()) return std::numeric_limits<int>::min();
    return -d.valuation();
}

// Ball {x : |x - center|_p <= p^radius_exp}.  Canonical centers keep only the
// digits below p^{-radius_exp}.
struct Ball {
    long long p = 2;
    PExp center;
    int radius_exp = 0;

    static Ball make(long long p, PExp c, int r) {
        Ball b{p, c, r};
        b.canonicalize();
        return b;
    }
    void canonicalize() {
        if (center.is_zero()) return;
        if (center.valuation() >= -radius_exp) { center = PExp::zero(); return; }
        long long mod = ipow(p, -radius_exp - center.exp);
        long long u = center.unit % mod;
        if (u < 0) u += mod;
        center = PExp::make(p, u, center.exp);
        if (!center.is_zero() && center.valuation() >= -radius_exp) center = PExp::zero();
    }

    bool contains_zero() const { return center.is_zero(); }
    bool contains_point(const PExp& x) const {
        int d = distance_exponent(p, x, center);
        return d <= radius_exp;
    }
    double measure_additive() const { return dpow(p, radius_exp); }

    // ultrametric trichotomy: disjoint, or one contains the other
    enum class Rel { disjoint, equal, first_contains_second, second_contains_first };
    static Rel relation(const Ball& a, const Ball& b) {
        int d = distance_exponent(a.p, a.center, b.center);
        if (d > std::max(a.radius_exp, b.radius_exp)) return Rel::disjoint;
        if (a.radius_exp == b.radius_exp) return Rel::equal;
        return a.radius_exp > b.radius_exp ? Rel::first_contains_second
                                           : Rel::second_contains_first;
    }

    std::vector<Ball> children() const {
        std::vector<Ball> out;
        out.reserve(static_cast<size_t>(p));
        for (long long a = 0; a < p; ++a)
            out.push_back(Ball::make(p, center.add(p, PExp::make(p, a, -radius_exp)),
                                     radius_exp - 1));
        return out;
    }

    bool operator==(const Ball& o) const {
        return p == o.p && radius_exp == o.radius_exp && center == o.center;
    }
};

}  // namespace parton
