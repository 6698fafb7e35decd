#pragma once

#include <cstdint>
#include <vector>

#include "fsig/rational.hpp"

namespace fsig {

/// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending degree,
/// computed by exact division of x^N - 1 by the product of the proper Phi_d.
/// Memoized; thread-safe.
const std::vector<BigInt>& cyclotomic_poly(unsigned order);

/// deg Phi_N = Euler totient of N.
unsigned cyclotomic_degree(unsigned order);

/// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
/// modulo Phi_N. Canonical after every operation, so equality and rationality
/// are coefficient checks. Immutable value type; safe to share across threads.
class Cyclotomic {
public:
    /// Zero of Q(zeta_N).
    explicit Cyclotomic(unsigned order);

    /// Constant embedding of a rational.
    Cyclotomic(unsigned order, const Rational& constant);

    /// zeta_N^m, exponent reduced mod N. The result has multiplicative order
    /// N / gcd(m, N).
    static Cyclotomic root_of_unity(unsigned order, long exponent);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    /// The constant coefficient, provided all others vanish.
    /// Throws Error(NotRational) otherwise.
    Rational as_rational() const;

    /// Ring automorphism zeta^j -> zeta^{jq}; requires gcd(q, N) = 1.
    Cyclotomic galois(unsigned exponent_multiplier) const;

    /// Complex conjugation, zeta^j -> zeta^{-j}. Involutive ring automorphism.
    Cyclotomic conjugate() const;

    /// Embed into Q(zeta_M) for N | M, via zeta_N -> zeta_M^{M/N}.
    Cyclotomic rebase(unsigned new_order) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& scalar);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    friend Cyclotomic geom_sum(unsigned order, long exponent, const BigInt& length);

    unsigned order_;
    std::vector<Rational> coeffs_;  // size deg Phi_N = phi(N) >= 1
};

/// sum_{a=0}^{L-1} (zeta_N^m)^a without iterating L terms: full periods of the
/// root cancel, so only L mod ord(zeta_N^m) terms are summed. When the root is
/// 1 the sum is the exact constant L. L may be astronomically large (p^e).
Cyclotomic geom_sum(unsigned order, long exponent, const BigInt& length);

}  // namespace fsig
