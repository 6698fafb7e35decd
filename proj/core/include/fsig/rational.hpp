#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "fsig/errors.hpp"

namespace fsig {

/// Arbitrary-precision integer. All counting and exponentiation goes through
/// this type; nothing in the engines assumes results fit machine words.
using BigInt = mpz_class;

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// value mod m as a nonnegative machine word (m >= 1).
inline unsigned long mod_ui(const BigInt& value, unsigned long m) {
    return mpz_fdiv_ui(value.get_mpz_t(), m);
}

/// base^exp mod m (m >= 1), nonnegative result.
inline unsigned long powmod_ui(const BigInt& base, unsigned long exp, unsigned long m) {
    BigInt e(static_cast<unsigned long>(exp)), mm(m), out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mm.get_mpz_t());
    return static_cast<unsigned long>(out.get_ui());
}

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1.
/// Arithmetic is closed and re-canonicalizes; there is no rounding anywhere.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit from integers is intended
    Rational(const BigInt& n) : value_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw Error(ErrorCode::InvalidInput, "Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parse decimal strings, as used by the JSON schema ({"num": .., "den": ..}).
    static Rational from_decimal_strings(const std::string& num, const std::string& den) {
        BigInt n, d;
        if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0 ||
            mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) {
            throw Error(ErrorCode::InvalidInput, "Rational: bad decimal string '" + num + "/" + den + "'");
        }
        return Rational(n, d);
    }

    BigInt numerator() const { return BigInt(value_.get_num()); }
    BigInt denominator() const { return BigInt(value_.get_den()); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "n" when integral, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;  // kept canonical
};

}  // namespace fsig
