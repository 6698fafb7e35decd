#include <doctest.h>

#include <numeric>
#include <vector>

#include "fsig/cyclotomic.hpp"

using fsig::BigInt;
using fsig::Cyclotomic;
using fsig::Rational;
using fsig::cyclotomic_poly;
using fsig::geom_sum;

namespace {

// Test-only polynomial oracle, independent of the implementation's division.
std::vector<BigInt> oracle_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// divide num by monic den; returns {quotient, remainder}
std::pair<std::vector<BigInt>, std::vector<BigInt>> oracle_divmod(std::vector<BigInt> num,
                                                                  const std::vector<BigInt>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {{BigInt(0)}, num};
    std::vector<BigInt> quot(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1;; --k) {
        BigInt c = num[k];
        quot[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
        if (k == dd) break;
    }
    num.resize(dd);
    return {quot, num};
}

unsigned oracle_totient(unsigned n) {
    unsigned count = 0;
    for (unsigned k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

std::vector<BigInt> x_power_minus_one(unsigned n) {
    std::vector<BigInt> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

bool all_zero(const std::vector<BigInt>& v) {
    for (const BigInt& c : v)
        if (c != 0) return false;
    return true;
}

struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned long long seed) : state(seed) {}
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

Cyclotomic random_element(Lcg& rng, unsigned order) {
    Cyclotomic out(order);
    for (int terms = 0; terms < 4; ++terms) {
        out += Cyclotomic::root_of_unity(order, rng.next(0, order - 1)) *
               Rational(rng.next(-5, 5), rng.next(1, 4));
    }
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: base cases and exact-division oracle") {
    CHECK(cyclotomic_poly(1) == std::vector<BigInt>{BigInt(-1), BigInt(1)});
    CHECK(cyclotomic_poly(2) == std::vector<BigInt>{BigInt(1), BigInt(1)});

    // Phi_6 = (x^6 - 1) / (Phi_1 Phi_2 Phi_3), computed with the test-side oracle
    auto divisor = oracle_mul(oracle_mul(cyclotomic_poly(1), cyclotomic_poly(2)), cyclotomic_poly(3));
    auto [quot6, rem6] = oracle_divmod(x_power_minus_one(6), divisor);
    CHECK(all_zero(rem6));
    CHECK(cyclotomic_poly(6) == quot6);
    CHECK(quot6 == std::vector<BigInt>{BigInt(1), BigInt(-1), BigInt(1)});  // x^2 - x + 1

    auto divisor8 = oracle_mul(oracle_mul(cyclotomic_poly(1), cyclotomic_poly(2)), cyclotomic_poly(4));
    auto [quot8, rem8] = oracle_divmod(x_power_minus_one(8), divisor8);
    CHECK(all_zero(rem8));
    CHECK(cyclotomic_poly(8) == quot8);
    CHECK(quot8 == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(1)});

    CHECK(cyclotomic_poly(12) ==
          std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-1), BigInt(0), BigInt(1)});
}

TEST_CASE("Phi_N has degree phi(N) and divides x^N - 1, N <= 60") {
    for (unsigned n = 1; n <= 60; ++n) {
        const auto& phi = cyclotomic_poly(n);
        CHECK(phi.size() - 1 == oracle_totient(n));
        CHECK(phi.back() == 1);  // monic
        auto [quot, rem] = oracle_divmod(x_power_minus_one(n), phi);
        CHECK(all_zero(rem));
    }
}

TEST_CASE("roots of unity") {
    CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(4, Rational(-1)));
    CHECK(Cyclotomic::root_of_unity(1, 5) == Cyclotomic(1, Rational(1)));
    CHECK(Cyclotomic::root_of_unity(6, 7) == Cyclotomic::root_of_unity(6, 1));
    CHECK(Cyclotomic::root_of_unity(6, -1) == Cyclotomic::root_of_unity(6, 5));
    // zeta_N^N = 1 and Phi_N(zeta_N) = 0 under the arithmetic
    for (unsigned n : {3u, 4u, 5u, 8u, 12u, 15u}) {
        Cyclotomic power(n, Rational(1));
        for (unsigned i = 0; i < n; ++i) power *= Cyclotomic::root_of_unity(n, 1);
        CHECK(power == Cyclotomic(n, Rational(1)));
        Cyclotomic at_root(n);
        const auto& phi = cyclotomic_poly(n);
        for (std::size_t i = 0; i < phi.size(); ++i)
            at_root += Cyclotomic::root_of_unity(n, static_cast<long>(i)) * Rational(phi[i]);
        CHECK(at_root.is_zero());
    }
}

TEST_CASE("root_of_unity has multiplicative order N / gcd(m, N)") {
    for (unsigned n : {6u, 8u, 12u}) {
        for (unsigned m = 0; m < n; ++m) {
            const Cyclotomic root = Cyclotomic::root_of_unity(n, static_cast<long>(m));
            const unsigned expected = n / std::gcd(m == 0 ? n : m, n);
            Cyclotomic power(n, Rational(1));
            unsigned first_one = 0;
            for (unsigned k = 1; k <= n; ++k) {
                power *= root;
                if (power == Cyclotomic(n, Rational(1))) {
                    first_one = k;
                    break;
                }
            }
            CHECK(first_one == expected);
        }
    }
}

TEST_CASE("field arithmetic identities") {
    CHECK(Cyclotomic::root_of_unity(6, 1) * Cyclotomic::root_of_unity(6, 5) ==
          Cyclotomic(6, Rational(1)));
    Cyclotomic full_period =
        Cyclotomic(3, Rational(1)) + Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
    CHECK(full_period.is_zero());
    CHECK(Cyclotomic::root_of_unity(4, 1).conjugate() == Cyclotomic::root_of_unity(4, 3));
    CHECK(Cyclotomic::root_of_unity(4, 1).conjugate() == -Cyclotomic::root_of_unity(4, 1));
}

TEST_CASE("conjugation is an involutive ring automorphism") {
    Lcg rng(11);
    for (unsigned order : {3u, 5u, 8u, 12u, 20u}) {
        for (int i = 0; i < 30; ++i) {
            Cyclotomic x = random_element(rng, order);
            Cyclotomic y = random_element(rng, order);
            CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
            CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
            CHECK(x.conjugate().conjugate() == x);
        }
    }
}

TEST_CASE("as_rational") {
    CHECK(Cyclotomic(5, Rational(7, 3)).as_rational() == Rational(7, 3));
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(4, 1).as_rational(), fsig::Error);
    CHECK((Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2)).as_rational() ==
          Rational(-1));
}

TEST_CASE("mixing orders is an error; rebase embeds compatibly") {
    CHECK_THROWS_AS(Cyclotomic(3, Rational(1)) + Cyclotomic(4, Rational(1)), fsig::Error);
    CHECK(Cyclotomic::root_of_unity(3, 1).rebase(6) == Cyclotomic::root_of_unity(6, 2));
    CHECK_THROWS_AS(Cyclotomic(4, Rational(1)).rebase(6), fsig::Error);

    Lcg rng(23);
    for (int i = 0; i < 25; ++i) {
        Cyclotomic x = random_element(rng, 5);
        Cyclotomic y = random_element(rng, 5);
        CHECK((x * y).rebase(15) == x.rebase(15) * y.rebase(15));
        CHECK((x + y).rebase(15) == x.rebase(15) + y.rebase(15));
    }
}

TEST_CASE("geom_sum: pinned examples") {
    CHECK(geom_sum(1, 0, BigInt(343)) == Cyclotomic(1, Rational(343)));
    CHECK(geom_sum(2, 1, BigInt(8)).is_zero());
    CHECK(geom_sum(6, 1, BigInt(7)) == Cyclotomic(6, Rational(1)));

    // 7-term literal sum oracle for (N=4, m=1, L=7)
    Cyclotomic literal(4);
    for (long a = 0; a < 7; ++a) literal += Cyclotomic::root_of_unity(4, a);
    CHECK(geom_sum(4, 1, BigInt(7)) == literal);
    CHECK(literal == Cyclotomic::root_of_unity(4, 1));
}

TEST_CASE("geom_sum equals literal summation (oracle equivalence)") {
    for (unsigned n = 1; n <= 14; ++n) {
        for (unsigned m = 0; m < n; ++m) {
            Cyclotomic literal(n);
            for (long len = 0; len <= 400; ++len) {
                CHECK(geom_sum(n, static_cast<long>(m), BigInt(len)) == literal);
                literal += Cyclotomic::root_of_unity(n, static_cast<long>(m) * len);
            }
        }
    }
}

TEST_CASE("geom_sum with astronomically large length") {
    BigInt huge = fsig::pow_big(BigInt(7), 200);  // ~10^169
    // 7 = 1 mod 6, so each full period contributes 0 and one term remains
    CHECK(geom_sum(6, 1, huge) == Cyclotomic::root_of_unity(6, 0));
    CHECK(geom_sum(12, 0, huge) == Cyclotomic(12, Rational(huge)));
}

TEST_CASE("rationality of geom_sum values") {
    for (unsigned n : {1u, 2u}) {
        for (unsigned m = 0; m < n; ++m)
            for (long len = 0; len <= 50; ++len)
                CHECK(geom_sum(n, static_cast<long>(m), BigInt(len)).is_rational());
    }
    CHECK_FALSE(geom_sum(4, 1, BigInt(7)).is_rational());
    CHECK(geom_sum(4, 1, BigInt(4)).is_rational());  // full periods cancel to 0
}
