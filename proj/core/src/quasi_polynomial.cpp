#include "fsig/quasi_polynomial.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>

namespace fsig {

namespace {

// Residues p^1, p^2, ... mod n until the walk returns to 1; {0} when n = 1.
std::vector<unsigned> residue_orbit(const BigInt& p, unsigned modulus) {
    if (modulus == 1) return {0};
    std::vector<unsigned> orbit;
    const unsigned long step = mod_ui(p, modulus);
    unsigned long r = step;
    do {
        orbit.push_back(static_cast<unsigned>(r));
        r = (r * step) % modulus;
    } while (orbit.back() != 1 && orbit.size() <= modulus);
    if (orbit.back() != 1) {
        throw Error(ErrorCode::InvalidInput,
                    "p = " + p.get_str() + " is not a unit mod " + std::to_string(modulus));
    }
    return orbit;
}

std::string power_text(unsigned c) {
    if (c == 1) return "p^e";
    return "p^{" + std::to_string(c) + "e}";
}

// One closed form like "p^{3e}/6 + p^e/2 + 1/3", highest power first.
std::string render_poly_text(const std::vector<Rational>& coeffs) {
    std::string out;
    for (unsigned c = static_cast<unsigned>(coeffs.size()); c-- > 0;) {
        const Rational& q = coeffs[c];
        if (q.is_zero()) continue;
        const bool negative = q.sign() < 0;
        const Rational a = negative ? -q : q;
        std::string piece;
        if (c == 0) {
            piece = a.str();
        } else {
            const BigInt num = a.numerator();
            piece = (num == 1 ? "" : num.get_str() + "*") + power_text(c);
            if (a.denominator() != 1) piece += "/" + a.denominator().get_str();
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_poly_latex(const std::vector<Rational>& coeffs) {
    std::string out;
    for (unsigned c = static_cast<unsigned>(coeffs.size()); c-- > 0;) {
        const Rational& q = coeffs[c];
        if (q.is_zero()) continue;
        const bool negative = q.sign() < 0;
        const Rational a = negative ? -q : q;
        const BigInt num = a.numerator();
        std::string upper = c == 0 ? num.get_str()
                                   : (num == 1 ? "" : num.get_str()) + power_text(c);
        std::string piece = a.denominator() == 1
                                ? upper
                                : "\\frac{" + upper + "}{" + a.denominator().get_str() + "}";
        if (out.empty()) {
            out = (negative ? "-" : "") + piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(BigInt p, unsigned modulus, unsigned degree, unsigned alpha,
                                 std::map<unsigned, std::vector<Rational>> cases,
                                 unsigned long group_order, unsigned long leading_rank)
    : p_(std::move(p)),
      modulus_(modulus),
      degree_(degree),
      alpha_(alpha),
      cases_(std::move(cases)),
      group_order_(group_order),
      leading_rank_(leading_rank) {
    if (modulus_ == 0) throw Error(ErrorCode::InvalidInput, "QuasiPolynomial: modulus must be >= 1");
    if (p_ < 2) throw Error(ErrorCode::InvalidInput, "QuasiPolynomial: p must be >= 2");
    if (modulus_ > 1 && std::gcd(mod_ui(p_, modulus_), static_cast<unsigned long>(modulus_)) != 1) {
        throw Error(ErrorCode::InvalidInput, "QuasiPolynomial: gcd(p, modulus) > 1");
    }
    if (cases_.empty()) throw Error(ErrorCode::InvalidInput, "QuasiPolynomial: empty coefficient table");
    for (const auto& [r, coeffs] : cases_) {
        if (r >= modulus_ && modulus_ > 1)
            throw Error(ErrorCode::InvalidInput, "QuasiPolynomial: residue out of range");
        if (coeffs.size() != static_cast<std::size_t>(degree_) + 1)
            throw Error(ErrorCode::InvalidInput, "QuasiPolynomial: coefficient vector length != degree + 1");
    }
    period_ = static_cast<unsigned>(residue_orbit(p_, modulus_).size());
}

unsigned QuasiPolynomial::residue_at(unsigned long e) const {
    if (modulus_ == 1) return 0;
    return static_cast<unsigned>(powmod_ui(p_, e, modulus_));
}

const std::vector<Rational>& QuasiPolynomial::coefficients_at(unsigned long e) const {
    const unsigned r = residue_at(e);
    auto it = cases_.find(r);
    if (it == cases_.end()) {
        throw Error(ErrorCode::MissingResidue,
                    "no coefficients for residue " + std::to_string(r) + " = p^" +
                        std::to_string(e) + " mod " + std::to_string(modulus_) +
                        " (corrupted table?)");
    }
    return it->second;
}

Rational QuasiPolynomial::evaluate(unsigned long e) const {
    const std::vector<Rational>& coeffs = coefficients_at(e);
    Rational total;
    for (unsigned c = 0; c <= degree_; ++c) {
        if (coeffs[c].is_zero()) continue;
        total += coeffs[c] * Rational(pow_big(p_, static_cast<unsigned long>(c) * e));
    }
    return total;
}

std::string QuasiPolynomial::render(RenderFormat format) const {
    if (format == RenderFormat::Json) return to_json();

    const bool latex = format == RenderFormat::Latex;
    auto poly = [&](const std::vector<Rational>& co) {
        return latex ? render_poly_latex(co) : render_poly_text(co);
    };

    // Collapse to a single closed form when the coefficients do not depend on
    // the residue class.
    bool constant_cases = true;
    const std::vector<Rational>& first = cases_.begin()->second;
    for (const auto& [r, co] : cases_)
        if (co != first) constant_cases = false;
    if (constant_cases) return poly(first);

    std::ostringstream os;
    if (latex) {
        os << "\\begin{cases} ";
        bool first_case = true;
        for (const auto& [r, co] : cases_) {
            if (!first_case) os << " \\\\ ";
            first_case = false;
            os << poly(co) << " & ";
            if (period_ == 2) {
                os << "\\text{for } e \\text{ " << (r == 1 ? "even" : "odd") << "}";
            } else {
                os << "p^e \\equiv " << r << " \\pmod{" << modulus_ << "}";
            }
        }
        os << " \\end{cases}";
    } else {
        bool first_case = true;
        for (const auto& [r, co] : cases_) {
            if (!first_case) os << "\n";
            first_case = false;
            if (period_ == 2) {
                os << (r == 1 ? "e even: " : "e odd:  ");
            } else {
                os << "p^e " << "≡" << " " << r << " (mod " << modulus_ << "): ";
            }
            os << poly(co);
        }
    }
    return os.str();
}

std::string QuasiPolynomial::to_json() const {
    nlohmann::ordered_json doc;
    doc["p"] = p_.get_str();
    doc["modulus"] = modulus_;
    doc["degree"] = degree_;
    doc["alpha"] = alpha_;
    doc["period"] = period_;
    doc["cases"] = nlohmann::ordered_json::array();
    for (const auto& [r, coeffs] : cases_) {
        nlohmann::ordered_json entry;
        entry["residue"] = r;
        entry["coefficients"] = nlohmann::ordered_json::array();
        for (const Rational& q : coeffs) {
            entry["coefficients"].push_back(
                {{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}});
        }
        doc["cases"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

QuasiPolynomial QuasiPolynomial::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("bad quasi-polynomial JSON: ") + e.what());
    }
    try {
        BigInt p;
        if (mpz_set_str(p.get_mpz_t(), doc.at("p").get<std::string>().c_str(), 10) != 0)
            throw Error(ErrorCode::InvalidInput, "bad prime string");
        const unsigned modulus = doc.at("modulus").get<unsigned>();
        const unsigned degree = doc.at("degree").get<unsigned>();
        const unsigned alpha = doc.at("alpha").get<unsigned>();
        const unsigned period = doc.at("period").get<unsigned>();
        std::map<unsigned, std::vector<Rational>> cases;
        for (const auto& entry : doc.at("cases")) {
            std::vector<Rational> coeffs;
            for (const auto& c : entry.at("coefficients")) {
                coeffs.push_back(Rational::from_decimal_strings(c.at("num").get<std::string>(),
                                                                c.at("den").get<std::string>()));
            }
            cases.emplace(entry.at("residue").get<unsigned>(), std::move(coeffs));
        }
        QuasiPolynomial qp(p, modulus, degree, alpha, std::move(cases), modulus);
        if (qp.period() != period) {
            throw Error(ErrorCode::InvalidInput,
                        "declared period " + std::to_string(period) + " != ord_n(p) = " +
                            std::to_string(qp.period()));
        }
        return qp;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("bad quasi-polynomial JSON: ") + e.what());
    }
}

bool QuasiPolynomial::equals(const QuasiPolynomial& other) const {
    if (p_ != other.p_ || modulus_ != other.modulus_ || degree_ != other.degree_) {
        throw Error(ErrorCode::StructuralMismatch,
                    "comparing quasi-polynomials with different p, modulus, or degree");
    }
    return cases_ == other.cases_;
}

}  // namespace fsig
