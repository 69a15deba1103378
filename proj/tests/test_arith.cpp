#include <doctest.h>

#include <numeric>

#include "latticeiso/arith.hpp"
#include "support/oracles.hpp"

using namespace latticeiso;
using arith::Factorization;
using arith::Representation;

namespace {

Factorization fact(i64 n) { return arith::factorize(to_integer(n)); }

}  // namespace

TEST_CASE("factorize on small inputs") {
    CHECK(fact(1).factors.empty());

    const auto f25 = fact(25);
    REQUIRE(f25.factors.size() == 1);
    CHECK(f25.factors[0].prime == 5);
    CHECK(f25.factors[0].exponent == 2);

    const auto f360 = fact(360);
    REQUIRE(f360.factors.size() == 3);
    CHECK(f360.factors[0].prime == 2);
    CHECK(f360.factors[0].exponent == 3);
    CHECK(f360.factors[1].prime == 3);
    CHECK(f360.factors[1].exponent == 2);
    CHECK(f360.factors[2].prime == 5);
    CHECK(f360.factors[2].exponent == 1);
}

TEST_CASE("factorize reconstructs n and keeps primes sorted") {
    for (i64 n = 1; n <= 2000; ++n) {
        const auto f = fact(n);
        Integer prod = 1;
        Integer last = 1;
        for (const auto& [p, e] : f.factors) {
            CHECK(p > last);
            last = p;
            CHECK(e >= 1);
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("is_realized examples") {
    CHECK(arith::is_realized(2));
    CHECK_FALSE(arith::is_realized(3));
    CHECK(arith::is_realized(45));
}

TEST_CASE("is_realized agrees with exhaustive search up to 2000") {
    for (i64 r = 1; r <= 2000; ++r) {
        const bool oracle = !oracle::two_squares_bruteforce(r).empty();
        CHECK_MESSAGE(arith::is_realized(to_integer(r)) == oracle, "r = ", r);
    }
}

TEST_CASE("all_representations examples") {
    const auto reps25 = arith::all_representations(25);
    REQUIRE(reps25.size() == 2);
    CHECK(reps25[0].a == 4);
    CHECK(reps25[0].b == 3);
    CHECK(reps25[0].primitive);
    CHECK(reps25[1].a == 5);
    CHECK(reps25[1].b == 0);
    CHECK_FALSE(reps25[1].primitive);   // gcd(5, 0) = 5

    const auto reps2 = arith::all_representations(2);
    REQUIRE(reps2.size() == 1);
    CHECK(reps2[0].a == 1);
    CHECK(reps2[0].b == 1);

    CHECK(arith::all_representations(3).empty());
}

TEST_CASE("all_representations matches brute force and satisfies a^2 + b^2 = r") {
    for (i64 r = 1; r <= 2000; ++r) {
        const auto reps = arith::all_representations(to_integer(r));
        const auto expected = oracle::two_squares_bruteforce(r);
        REQUIRE_MESSAGE(reps.size() == expected.size(), "r = ", r);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            // Oracle scans a ascending as well.
            CHECK(reps[i].a == expected[i].first);
            CHECK(reps[i].b == expected[i].second);
            CHECK(reps[i].a * reps[i].a + reps[i].b * reps[i].b == r);
        }
    }
}

TEST_CASE("primitive_representation examples and errors") {
    const auto rep5 = arith::primitive_representation(5);
    CHECK(rep5.a == 2);
    CHECK(rep5.b == 1);

    const auto rep25 = arith::primitive_representation(25);
    CHECK(rep25.a == 4);
    CHECK(rep25.b == 3);

    CHECK_THROWS_AS(arith::primitive_representation(9), NoPrimitiveRepresentationError);
    CHECK_THROWS_AS(arith::primitive_representation(3), NotRealizedError);
    CHECK_THROWS_AS(arith::primitive_representation(4), NoPrimitiveRepresentationError);   // gamma = 2
}

TEST_CASE("mandatory_gcd_divisor examples") {
    CHECK(arith::mandatory_gcd_divisor(25) == 1);
    CHECK(arith::mandatory_gcd_divisor(8) == 2);    // gamma = 3
    CHECK(arith::mandatory_gcd_divisor(45) == 3);   // q = 3, beta = 1
}

TEST_CASE("h divides gcd of every representation up to 2000") {
    for (i64 r = 1; r <= 2000; ++r) {
        const i64 h = to_i64(arith::mandatory_gcd_divisor(to_integer(r)));
        for (const auto& rep : arith::all_representations(to_integer(r))) {
            const i64 g = std::gcd(to_i64(rep.a), to_i64(rep.b));
            CHECK_MESSAGE(g % h == 0, "r = ", r, ", gcd = ", g, ", h = ", h);
        }
    }
}

TEST_CASE("core_decompose examples") {
    const auto d50 = arith::core_decompose(50);
    CHECK(d50.core == 25);
    CHECK(d50.gamma == 1);
    CHECK(d50.q_part.empty());

    const auto d45 = arith::core_decompose(45);
    CHECK(d45.core == 5);
    CHECK(d45.gamma == 0);
    REQUIRE(d45.q_part.size() == 1);
    CHECK(d45.q_part[0].prime == 3);
    CHECK(d45.q_part[0].exponent == 1);

    const auto d25 = arith::core_decompose(25);
    CHECK(d25.core == 25);
    CHECK(d25.gamma == 0);
    CHECK(d25.q_part.empty());

    CHECK_THROWS_AS(arith::core_decompose(3), NotRealizedError);
}

TEST_CASE("core_decompose round-trips and core is primitively representable") {
    for (i64 r = 1; r <= 2000; ++r) {
        if (!arith::is_realized(to_integer(r))) continue;
        const auto dec = arith::core_decompose(to_integer(r));
        Integer rebuilt = dec.core;
        for (unsigned i = 0; i < dec.gamma; ++i) rebuilt *= 2;
        for (const auto& [q, beta] : dec.q_part) {
            for (unsigned i = 0; i < 2 * beta; ++i) rebuilt *= q;
        }
        CHECK(rebuilt == r);
        CHECK(arith::is_realized(dec.core));
        CHECK_NOTHROW(arith::primitive_representation(dec.core));
        for (const auto& [p, e] : arith::factorize(dec.core).factors) {
            CHECK(p % 4 == 1);
        }
    }
}

TEST_CASE("solve_unit_bezout examples") {
    const auto b43 = arith::solve_unit_bezout(4, 3);
    CHECK(b43.s == 2);
    CHECK(b43.t == 3);
    CHECK(b43.s + b43.t < b43.a + b43.b);

    const auto b01 = arith::solve_unit_bezout(0, 1);
    CHECK(b01.s == 0);
    CHECK(b01.t == 1);

    const auto b21 = arith::solve_unit_bezout(2, 1);
    CHECK(b21.s == 0);
    CHECK(b21.t == 1);
}

TEST_CASE("solve_unit_bezout errors") {
    CHECK_THROWS_AS(arith::solve_unit_bezout(3, 4), BadParityError);
    CHECK_THROWS_AS(arith::solve_unit_bezout(2, 4), BadParityError);
    CHECK_THROWS_AS(arith::solve_unit_bezout(0, 3), NotCoprimeError);
    CHECK_THROWS_AS(arith::solve_unit_bezout(6, 3), NotCoprimeError);
}

TEST_CASE("solve_unit_bezout identity and minimality for all coprime pairs with a+b <= 200") {
    for (i64 a = 0; a <= 200; a += 2) {
        for (i64 b = 1; a + b <= 200; b += 2) {
            if (std::gcd(a, b) != 1) continue;
            const auto bez = arith::solve_unit_bezout(to_integer(a), to_integer(b));
            CHECK(bez.s * a - bez.t * b == -1);
            CHECK(bez.s >= 0);
            CHECK(bez.t >= 0);
            if (a > 0) CHECK(bez.s < b);
            const auto [s, t] = oracle::unit_bezout_bruteforce(a, b);
            CHECK(bez.s == s);
            CHECK(bez.t == t);
        }
    }
}
