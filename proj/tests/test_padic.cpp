#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "parton/padic.hpp"

using namespace parton;
using Catch::Approx;

TEST_CASE("parsing rationals and digit strings", "[padic]") {
    auto x = parse_qp("12", 3);
    CHECK(x.valuation() == 1);
    CHECK(x.norm_rational() == Rat(1, 3));

    auto h = parse_qp("1/2", 2);
    CHECK(h.valuation() == -1);
    CHECK(h.norm() == Approx(2.0));

    auto z = parse_qp("0", 5);
    CHECK(z.is_zero());
    CHECK(z.norm() == 0.0);

    CHECK_THROWS_AS(parse_qp("1", 4), std::invalid_argument);   // non-prime modulus
    CHECK_THROWS_AS(parse_qp("x7", 5), std::exception);          // malformed
    CHECK_THROWS_AS(parse_qp("12 (base 13)", 13), std::invalid_argument);  // ambiguous digits
    CHECK_THROWS_AS(parse_qp("3 1 (base 3)", 3), std::invalid_argument);   // digit out of range
}

TEST_CASE("format/parse round trip is canonical", "[padic]") {
    std::uniform_int_distribution<long long> num(-500, 500), den(1, 120);
    for (long long p : {2LL, 3LL, 7LL, 13LL}) {
        for (int trial = 0; trial < 100; ++trial) {
            long long a = num(oracles::rng()), b = den(oracles::rng());
            auto x = PadicNumber::from_rational(p, a, b);
            auto back = parse_qp(format_qp(x), p);
            CHECK(back == x);
        }
        auto zero_back = parse_qp(format_qp(PadicNumber::zero(p)), p);
        CHECK(zero_back.is_zero());
    }
    // expansion with a point round-trips too
    auto y = parse_qp("1 0 . 1 1 (base 2)", 2);
    CHECK(y.valuation() == -2);
    CHECK(y.fractional_part() == Rat(3, 4));
}

TEST_CASE("arithmetic on Q_p", "[padic]") {
    auto half = PadicNumber::from_rational(2, 1, 2);
    auto two = PadicNumber(2, 2);
    auto prod = half * two;
    CHECK(prod.valuation() == 0);
    CHECK(prod.norm() == Approx(1.0));
    CHECK(prod == PadicNumber(2, 1));

    auto sum = PadicNumber(2, 1) + PadicNumber(2, 1);
    CHECK(sum.valuation() == 1);

    auto inv3 = PadicNumber(2, 3).inverse();
    CHECK(inv3.norm() == Approx(1.0));
    CHECK(inv3 * PadicNumber(2, 3) == PadicNumber(2, 1));

    CHECK_THROWS_AS(PadicNumber::zero(5).inverse(), std::domain_error);
    CHECK_THROWS_AS(PadicNumber(2, 1) + PadicNumber(3, 1), PrimeMismatch);
    auto x = PadicNumber(3, 7);
    CHECK_THROWS_AS(x + (-x), PrecisionLoss);  // total cancellation
}

TEST_CASE("precision tracking under cancellation", "[padic]") {
    // 1 + (p^8 - 1): the low digits cancel, leaving 8 fewer significant digits
    auto a = PadicNumber(3, 1, 20);
    auto b = PadicNumber(3, ipow(3, 8) - 1, 20);
    auto s = a + b;
    CHECK(s.valuation() == 8);
    CHECK(s.precision() == 12);
    // multiplication keeps the min precision
    auto m = PadicNumber(3, 5, 10) * PadicNumber(3, 7, 24);
    CHECK(m.precision() == 10);
}

TEST_CASE("fractional part and additive character", "[padic]") {
    CHECK(PadicNumber::from_rational(2, 7, 8).fractional_part() == Rat(7, 8));
    CHECK(PadicNumber(3, 5).fractional_part() == Rat(0));
    auto x = PadicNumber::from_rational(3, 1, 3) + PadicNumber(3, 2);
    CHECK(x.fractional_part() == Rat(1, 3));

    CHECK(additive_character(PadicNumber::from_rational(2, 1, 2)).real() == Approx(-1.0));
    CHECK(additive_character(PadicNumber(7, 123)) == cplx{1.0, 0.0});
    auto w = additive_character(PadicNumber::from_rational(3, 1, 3));
    CHECK(w.real() == Approx(std::cos(kTwoPi / 3)));
    CHECK(w.imag() == Approx(std::sin(kTwoPi / 3)));
}

TEST_CASE("unit ball indicator", "[padic]") {
    CHECK(indicator_omega(PadicNumber(2, 3), PadicNumber::zero(2)) == 1);
    CHECK(indicator_omega(PadicNumber::from_rational(2, 1, 2), PadicNumber::zero(2)) == 0);
    auto c = PadicNumber::from_rational(5, 7, 3);
    CHECK(indicator_omega(c, c) == 1);
    CHECK_THROWS_AS(indicator_omega(PadicNumber(2, 1), PadicNumber(3, 1)), PrimeMismatch);
}

TEST_CASE("ultrametric and character properties on random pairs", "[padic]") {
    std::uniform_int_distribution<long long> num(-400, 400), den(1, 60);
    for (long long p : {2LL, 5LL}) {
        for (int trial = 0; trial < 300; ++trial) {
            long long a = num(oracles::rng()), b = den(oracles::rng());
            long long c = num(oracles::rng()), d = den(oracles::rng());
            if (a == 0 || c == 0) continue;
            auto x = PadicNumber::from_rational(p, a, b);
            auto y = PadicNumber::from_rational(p, c, d);
            PadicNumber s = [&]() {
                try {
                    return x + y;
                } catch (const PrecisionLoss&) {
                    return PadicNumber::zero(p);
                }
            }();
            double mx = std::max(x.norm(), y.norm());
            CHECK(s.norm() <= mx * (1 + 1e-12));
            if (x.norm() != y.norm()) CHECK(s.norm() == Approx(mx));

            // frac(x+y) = frac(x)+frac(y) mod 1, exactly as rationals
            Rat lhs = s.is_zero() ? Rat(0) : s.fractional_part();
            Rat rhs = (x.fractional_part() + y.fractional_part()).mod1();
            CHECK(lhs == rhs);

            // character morphism
            cplx prod = additive_character(x) * additive_character(y);
            cplx direct = s.is_zero() ? cplx{1.0, 0.0} : additive_character(s);
            CHECK(std::abs(prod - direct) < 1e-12);
        }
    }
}

TEST_CASE("balls are nested or disjoint", "[padic]") {
    std::uniform_int_distribution<long long> unit(-40, 40);
    std::uniform_int_distribution<int> expo(-3, 3), rad(-3, 3);
    for (int trial = 0; trial < 500; ++trial) {
        long long p = 3;
        Ball a = Ball::make(p, PExp::make(p, unit(oracles::rng()), expo(oracles::rng())),
                            rad(oracles::rng()));
        Ball b = Ball::make(p, PExp::make(p, unit(oracles::rng()), expo(oracles::rng())),
                            rad(oracles::rng()));
        auto rel = Ball::relation(a, b);
        bool b_center_in_a = a.contains_point(b.center);
        bool a_center_in_b = b.contains_point(a.center);
        switch (rel) {
            case Ball::Rel::disjoint:
                CHECK_FALSE(b_center_in_a);
                CHECK_FALSE(a_center_in_b);
                break;
            case Ball::Rel::equal:
                CHECK(b_center_in_a);
                CHECK(a_center_in_b);
                CHECK(a.radius_exp == b.radius_exp);
                break;
            case Ball::Rel::first_contains_second:
                CHECK(b_center_in_a);
                break;
            case Ball::Rel::second_contains_first:
                CHECK(a_center_in_b);
                break;
        }
    }
}
