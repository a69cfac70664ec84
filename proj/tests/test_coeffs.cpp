#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace parton;
using Catch::Approx;

TEST_CASE("eta-product tau values", "[coeffs]") {
    auto t = ramanujan_tau_table(50);
    CHECK(int128_to_string(t[1]) == "1");
    CHECK(int128_to_string(t[2]) == "-24");
    CHECK(int128_to_string(t[3]) == "252");
    CHECK(int128_to_string(t[4]) == "-1472");
    CHECK(int128_to_string(t[5]) == "4830");
    CHECK(int128_to_string(t[6]) == "-6048");
    CHECK(int128_to_string(t[12]) == "-370944");
}

TEST_CASE("stream recursion against the eta oracle", "[coeffs]") {
    auto tau = CoefficientStream::tau_stream(2000);
    // a(4) = a(2)^2 - 2^{11} a(1) from the recursion
    CHECK(tau.coefficient(4).real() == Approx(-1472.0));
    // a(6) = a(2) a(3) by multiplicativity
    CHECK(tau.coefficient(6).real() == Approx(-6048.0));
    CHECK(tau.coefficient(1) == cplx{1.0, 0.0});

    auto table = ramanujan_tau_table(2000);
    for (long long n = 1; n <= 2000; ++n)
        CHECK(tau_from_recursion(n, table) == table[static_cast<size_t>(n)]);
}

TEST_CASE("Deligne bound and growth reports", "[coeffs]") {
    auto tau = CoefficientStream::tau_stream(200);
    auto rep = coefficient_bound_check(tau, 100);
    CHECK(rep.max_ratio <= 2.0);
    CHECK(rep.primes_checked == 25);

    auto nu = character_by_index(5, 1);
    auto pd = CoefficientStream::product_dirichlet(nu);
    auto rep2 = coefficient_bound_check(pd, 100);
    CHECK(rep2.max_ratio <= 2.0 + 1e-12);  // |2 cos(arg nu_p)| <= 2
    CHECK(std::abs(pd.seed(5)) == 0.0);    // ratio 0 at p | N
}

TEST_CASE("Chebyshev polynomials of the second kind", "[coeffs]") {
    CHECK(chebyshev_u(0, 0.77) == 1.0);
    CHECK(chebyshev_u(1, 0.3) == Approx(0.6));
    CHECK(chebyshev_u(2, 0.0) == Approx(-1.0));
    for (int i = 1; i < 40; ++i) {
        double theta = i * std::numbers::pi / 40.0;
        for (int n : {0, 1, 2, 5, 17, 80, 200})
            CHECK(chebyshev_u(n, std::cos(theta)) ==
                  Approx(oracles::chebyshev_trig(n, theta)).margin(1e-10));
    }
}

TEST_CASE("character convolution coefficients", "[coeffs]") {
    auto nu = character_by_index(5, 1);  // nu(2) = i
    REQUIRE(std::abs(nu.value(2) - cplx{0.0, 1.0}) < 1e-14);
    auto a = convolution_coeffs(nu, 50);
    CHECK(std::abs(a[4] - cplx{-1.0, 0.0}) < 1e-14);  // conj(nu(4)) + 1 + nu(4) = -1
    CHECK(std::abs(a[2]) < 1e-14);                     // i + conj(i)
    CHECK(std::abs(a[5]) < 1e-14);                     // every divisor pair hits the modulus
    CHECK(std::abs(a[1] - cplx{1.0, 0.0}) < 1e-14);

    CHECK_THROWS_AS(convolution_coeffs(characters_mod(5)[0], 10), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientStream::product_dirichlet(characters_mod(5)[0]),
                    std::invalid_argument);

    // divisor sums match the Chebyshev product prediction
    for (long long n = 1; n <= 50; ++n)
        CHECK(std::abs(a[static_cast<size_t>(n)] - chebyshev_prediction(nu, n)) < 1e-12);
}

TEST_CASE("multiplicativity on random coprime pairs", "[coeffs]") {
    auto tau = CoefficientStream::tau_stream(3000);
    auto pd = CoefficientStream::product_dirichlet(character_by_index(7, 2));
    std::uniform_int_distribution<long long> pick(1, 1500);
    int done = 0;
    while (done < 500) {
        long long m = pick(oracles::rng()), n = pick(oracles::rng());
        if (gcd_ll(m, n) != 1) continue;
        ++done;
        cplx lt = tau.coefficient(m * n), rt = tau.coefficient(m) * tau.coefficient(n);
        CHECK(std::abs(lt - rt) <= 1e-12 * std::max(1.0, std::abs(rt)));
        cplx lp = pd.coefficient(m * n), rp = pd.coefficient(m) * pd.coefficient(n);
        CHECK(std::abs(lp - rp) <= 1e-12 * std::max(1.0, std::abs(rp)));
    }
}

TEST_CASE("custom streams and missing seeds", "[coeffs]") {
    auto s = CoefficientStream::custom(4, {{2, {3.0, 0.0}}}, {{2, {1.0, 0.0}}});
    CHECK(s.coefficient(1) == cplx{1.0, 0.0});
    // a(4) = a(2)^2 - chi(2) 2^{k-1} a(1) = 9 - 8
    CHECK(s.coefficient(4).real() == Approx(1.0));
    CHECK_THROWS_AS(s.coefficient(3), MissingSeed);
    CHECK_THROWS_AS(s.coefficient(6), MissingSeed);
}
