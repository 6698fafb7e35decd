#include "fsig/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace fsig {

namespace {

// Quotient of integer polynomials, exact (divisor monic, remainder vanishes).
// Ascending coefficients.
std::vector<BigInt> exact_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dn, 0);
    for (std::size_t k = num.size() - 1; ; --k) {
        BigInt c = num[k] / den[dn];
        quot[k - dn] = c;
        if (c != 0) {
            for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
        }
        if (k == dn) break;
    }
    return quot;
}

std::vector<BigInt> poly_mul_int(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::mutex cache_mutex;

using PolyCache = std::map<unsigned, std::vector<BigInt>>;

const std::vector<BigInt>& cyclotomic_poly_locked(unsigned order, PolyCache& cache) {
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> result;
    if (order == 1) {
        result = {BigInt(-1), BigInt(1)};  // x - 1
    } else {
        std::vector<BigInt> divisor = {BigInt(1)};
        for (unsigned d = 1; d < order; ++d) {
            if (order % d == 0) divisor = poly_mul_int(divisor, cyclotomic_poly_locked(d, cache));
        }
        std::vector<BigInt> num(order + 1, 0);
        num[0] = -1;
        num[order] = 1;
        result = exact_div(std::move(num), divisor);
    }
    return cache.emplace(order, std::move(result)).first->second;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_poly(unsigned order) {
    if (order == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic_poly: order must be >= 1");
    static PolyCache cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_poly_locked(order, cache);
}

unsigned cyclotomic_degree(unsigned order) {
    return static_cast<unsigned>(cyclotomic_poly(order).size()) - 1;
}

namespace {

// Reduce an ascending-coefficient rational polynomial modulo the monic Phi_N.
std::vector<Rational> reduce_mod_phi(const std::vector<BigInt>& phi, std::vector<Rational> poly) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > deg;) {
        Rational c = poly[k];
        if (c.is_zero()) continue;
        poly[k] = Rational(0);
        for (std::size_t i = 0; i < deg; ++i) poly[k - deg + i] -= c * Rational(phi[i]);
    }
    poly.resize(deg, Rational(0));
    return poly;
}

// Canonical power-basis forms of zeta_N^k for k = 0..N-1.
const std::vector<std::vector<Rational>>& power_table(unsigned order) {
    const std::vector<BigInt>& phi = cyclotomic_poly(order);
    static std::map<unsigned, std::vector<std::vector<Rational>>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    const std::size_t deg = phi.size() - 1;
    std::vector<std::vector<Rational>> table(order);
    for (unsigned k = 0; k < order; ++k) {
        if (k < deg) {
            table[k].assign(deg, Rational(0));
            table[k][k] = Rational(1);
        } else {
            std::vector<Rational> shifted(deg + 1, Rational(0));
            for (std::size_t i = 0; i < deg; ++i) shifted[i + 1] = table[k - 1][i];
            table[k] = reduce_mod_phi(phi, std::move(shifted));
        }
    }
    return cache.emplace(order, std::move(table)).first->second;
}

void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) {
        throw Error(ErrorCode::OrderMismatch,
                    "cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()) + " (rebase into the lcm first)");
    }
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
    if (order == 0) throw Error(ErrorCode::InvalidInput, "Cyclotomic: order must be >= 1");
    coeffs_.assign(cyclotomic_degree(order), Rational(0));
}

Cyclotomic::Cyclotomic(unsigned order, const Rational& constant) : Cyclotomic(order) {
    coeffs_[0] = constant;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long exponent) {
    Cyclotomic out(order);
    long m = exponent % static_cast<long>(order);
    if (m < 0) m += order;
    out.coeffs_ = power_table(order)[static_cast<unsigned>(m)];
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) {
        throw Error(ErrorCode::NotRational,
                    "cyclotomic value of order " + std::to_string(order_) +
                        " is not rational (inconsistent class/character input?)");
    }
    return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(unsigned exponent_multiplier) const {
    const unsigned q = exponent_multiplier % order_;
    if (std::gcd(q, order_) != 1 && order_ > 1) {
        throw Error(ErrorCode::NonInvertible,
                    "galois: multiplier " + std::to_string(exponent_multiplier) +
                        " is not a unit mod " + std::to_string(order_));
    }
    if (order_ == 1 || q == 1) return *this;
    const auto& table = power_table(order_);
    Cyclotomic out(order_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c.is_zero()) continue;
        const auto& basis = table[(j * q) % order_];
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!basis[i].is_zero()) out.coeffs_[i] += c * basis[i];
    }
    return out;
}

Cyclotomic Cyclotomic::conjugate() const {
    if (order_ <= 2) return *this;  // already real
    return galois(order_ - 1);
}

Cyclotomic Cyclotomic::rebase(unsigned new_order) const {
    if (new_order == 0 || new_order % order_ != 0) {
        throw Error(ErrorCode::OrderMismatch,
                    "rebase: " + std::to_string(order_) + " does not divide " +
                        std::to_string(new_order));
    }
    if (new_order == order_) return *this;
    const unsigned factor = new_order / order_;
    const auto& table = power_table(new_order);
    Cyclotomic out(new_order);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c.is_zero()) continue;
        const auto& basis = table[(static_cast<unsigned long>(j) * factor) % new_order];
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!basis[i].is_zero()) out.coeffs_[i] += c * basis[i];
    }
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    require_same_order(*this, o);
    std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = reduce_mod_phi(cyclotomic_poly(order_), std::move(prod));
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
    for (Rational& c : coeffs_) c *= scalar;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (Rational& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic geom_sum(unsigned order, long exponent, const BigInt& length) {
    if (order == 0) throw Error(ErrorCode::InvalidInput, "geom_sum: order must be >= 1");
    if (length < 0) throw Error(ErrorCode::InvalidInput, "geom_sum: negative length");
    long m = exponent % static_cast<long>(order);
    if (m < 0) m += order;
    const unsigned mm = static_cast<unsigned>(m);
    const unsigned root_order = mm == 0 ? 1 : order / std::gcd(mm, order);
    if (root_order == 1) return Cyclotomic(order, Rational(length));
    const unsigned long rem = mod_ui(length, root_order);
    const auto& table = power_table(order);
    Cyclotomic out(order);
    for (unsigned long a = 0; a < rem; ++a) {
        const auto& basis = table[(a * mm) % order];
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!basis[i].is_zero()) out.coeffs_[i] += basis[i];
    }
    return out;
}

}  // namespace fsig
