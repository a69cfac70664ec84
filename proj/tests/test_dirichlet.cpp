#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "parton/dirichlet.hpp"

using namespace parton;
using Catch::Approx;

TEST_CASE("character enumeration", "[dirichlet]") {
    auto c5 = characters_mod(5);
    REQUIRE(c5.size() == 4);
    CHECK(c5[0].is_principal());
    // (Z/5)^* is cyclic generated by 2: every unit is a power of 2 and each
    // character is pinned by its value there
    for (const auto& chi : c5) {
        for (long long m : {1LL, 2LL, 3LL, 4LL}) {
            long long k = 0, x = 1;
            while (x != m) { x = x * 2 % 5; ++k; }
            cplx expect = std::pow(chi.value(2), static_cast<double>(k));
            CHECK(std::abs(chi.value(m) - expect) < 1e-12);
        }
        CHECK(std::abs(chi.value(10)) == 0.0);  // gcd > 1
    }

    auto c1 = characters_mod(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].value(17) == cplx{1.0, 0.0});

    // (Z/8)^* = C2 x C2: four characters, all of order dividing 2
    auto c8 = characters_mod(8);
    REQUIRE(c8.size() == 4);
    for (const auto& chi : c8)
        for (long long m : {1LL, 3LL, 5LL, 7LL})
            CHECK(std::abs(chi.value(m) * chi.value(m) - chi.value(m * m % 8)) < 1e-12);
}

TEST_CASE("complete multiplicativity with zero off the units", "[dirichlet]") {
    for (long long N : {5LL, 7LL, 8LL, 9LL, 12LL}) {
        for (const auto& chi : characters_mod(N)) {
            for (long long a = 0; a < N; ++a) {
                for (long long b = 0; b < N; ++b) {
                    cplx lhs = chi.value(a * b);
                    cplx rhs = chi.value(a) * chi.value(b);
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("parity", "[dirichlet]") {
    auto c5 = characters_mod(5);
    for (const auto& chi : c5) {
        // epsilon from chi(-1) matches epsilon from chi(N-1): same residue
        int eps = parity_epsilon(chi);
        CHECK(eps == (std::abs(chi.value(5 - 1) - cplx{1.0, 0.0}) < 1e-9 ? 0 : 1));
        if (chi.is_principal()) CHECK(eps == 0);
        // chi(4) = chi(2)^2
        if (std::abs(chi.value(2) - cplx{0.0, 1.0}) < 1e-12) CHECK(eps == 1);
        if (std::abs(chi.value(2) + cplx{1.0, 0.0}) < 1e-12) CHECK(eps == 0);  // quadratic
    }
}

TEST_CASE("Gauss sums", "[dirichlet]") {
    auto c5 = characters_mod(5);
    const DirichletCharacter* quad = nullptr;
    for (const auto& chi : c5)
        if (!chi.is_principal() && std::abs(chi.value(2).imag()) < 1e-12) quad = &chi;
    REQUIRE(quad != nullptr);

    // direct 5-term oracle
    cplx direct = 0.0;
    for (long long m = 0; m < 5; ++m) direct += quad->value(m) * unit_phase(m / 5.0);
    CHECK(std::abs(gauss_sum(*quad) - direct) < 1e-14);
    CHECK(gauss_sum(*quad).real() == Approx(std::sqrt(5.0)));
    CHECK(std::abs(gauss_sum(*quad).imag()) < 1e-12);

    // principal character mod 5: sum of the nontrivial 5th roots of unity
    CHECK(gauss_sum(c5[0]).real() == Approx(-1.0));

    // tau(nu) tau(nu*) = nu(-1) N for primitive characters
    for (long long N : {5LL, 7LL}) {
        for (const auto& chi : characters_mod(N)) {
            if (!is_primitive(chi)) continue;
            cplx lhs = gauss_sum(chi) * gauss_sum(chi.conjugate());
            cplx rhs = chi.value(N - 1) * static_cast<double>(N);
            CHECK(std::abs(lhs - rhs) < 1e-12);
            CHECK(std::abs(gauss_sum(chi)) == Approx(std::sqrt(static_cast<double>(N))).epsilon(1e-10));
        }
    }
}

TEST_CASE("primitivity and conductors", "[dirichlet]") {
    auto c5 = characters_mod(5);
    CHECK_FALSE(is_primitive(c5[0]));
    CHECK(conductor(c5[0]) == 1);
    for (size_t i = 1; i < c5.size(); ++i) CHECK(is_primitive(c5[i]));

    // mod 9: phi(9) = 6 characters; the ones induced from mod 3 have
    // conductor 3 and are not primitive
    auto c9 = characters_mod(9);
    REQUIRE(c9.size() == 6);
    int induced = 0;
    for (const auto& chi : c9)
        if (!chi.is_principal() && conductor(chi) == 3) {
            ++induced;
            CHECK_FALSE(is_primitive(chi));
        }
    CHECK(induced == 1);  // exactly the lift of the quadratic character mod 3
}

TEST_CASE("orthogonality of the character table", "[dirichlet]") {
    for (long long N : {5LL, 8LL, 12LL}) {
        auto chars = characters_mod(N);
        long long phi = static_cast<long long>(chars.size());
        for (size_t i = 0; i < chars.size(); ++i) {
            for (size_t j = 0; j < chars.size(); ++j) {
                cplx acc = 0.0;
                for (long long m = 0; m < N; ++m)
                    acc += chars[i].value(m) * std::conj(chars[j].value(m));
                cplx expect = (i == j) ? cplx{static_cast<double>(phi), 0.0} : cplx{0.0, 0.0};
                CHECK(std::abs(acc - expect) < 1e-12);
            }
        }
    }
}

TEST_CASE("descriptor round trip", "[dirichlet]") {
    auto chi = character_by_index(7, 3);
    CHECK(chi.descriptor() == "7:3");
    CHECK(character_by_index(7, 3).label() == 3);
    CHECK_THROWS_AS(character_by_index(7, 6), std::invalid_argument);
    // conjugation permutes labels within the group
    auto conj = chi.conjugate();
    CHECK(conj.modulus() == 7);
    CHECK(std::abs(conj.value(3) - std::conj(chi.value(3))) < 1e-14);
}
