#include <doctest.h>

#include "fsig/rational.hpp"

using fsig::BigInt;
using fsig::Rational;

namespace {

// small deterministic generator for property checks
struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned long long seed) : state(seed) {}
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).numerator() == 3);
    CHECK(Rational(6, 4).denominator() == 2);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 17).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), fsig::Error);
}

TEST_CASE("canonical form invariant holds after arithmetic") {
    Lcg rng(42);
    for (int i = 0; i < 500; ++i) {
        Rational a(rng.next(-50, 50), rng.next(1, 30));
        Rational b(rng.next(-50, 50), rng.next(1, 30));
        for (const Rational& r : {a + b, a - b, a * b}) {
            BigInt g;
            BigInt num = r.numerator();
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(r.denominator() >= 1);
        }
    }
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), fsig::Error);

    // distributivity on sampled triples
    Lcg rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a(rng.next(-40, 40), rng.next(1, 25));
        Rational b(rng.next(-40, 40), rng.next(1, 25));
        Rational c(rng.next(-40, 40), rng.next(1, 25));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 3).sign() == 1);
    CHECK(Rational(-7, 3).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(3, 2).is_integer());
}

TEST_CASE("string forms") {
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(14, 7).str() == "2");
    const Rational big = Rational::from_decimal_strings("123456789012345678901234567890", "4");
    CHECK(big.numerator().get_str() == "61728394506172839450617283945");
    CHECK(big.denominator() == 2);
    CHECK_THROWS_AS(Rational::from_decimal_strings("12x", "1"), fsig::Error);
}
