#pragma once

#include <map>
#include <string>
#include <vector>

#include "fsig/rational.hpp"

namespace fsig {

enum class RenderFormat { Text, Latex, Json };

/// A multiplicity function of p^e: sum_c phi_c(e) p^{ce} where each phi_c is
/// periodic in e through the residue r_e = p^e mod n. The coefficient table is
/// keyed by r_e over the cyclic subgroup <p> of (Z/n)*, so evaluation at any
/// e >= 0 is a modular exponentiation plus a table lookup. Immutable.
class QuasiPolynomial {
public:
    /// cases maps each residue in <p> mod n to [phi_0(r), ..., phi_d(r)].
    /// group_order and leading_rank are display metadata (|G| and rank M_alpha).
    QuasiPolynomial(BigInt p, unsigned modulus, unsigned degree, unsigned alpha,
                    std::map<unsigned, std::vector<Rational>> cases,
                    unsigned long group_order, unsigned long leading_rank = 1);

    const BigInt& prime() const { return p_; }
    unsigned modulus() const { return modulus_; }
    unsigned degree() const { return degree_; }
    unsigned alpha() const { return alpha_; }
    /// ord_n(p), the number of residue classes (1 when n = 1).
    unsigned period() const { return period_; }
    unsigned long group_order() const { return group_order_; }
    unsigned long leading_rank() const { return leading_rank_; }
    const std::map<unsigned, std::vector<Rational>>& cases() const { return cases_; }

    /// p^e mod n (0 when n = 1). e = 0 lands on the residue class of 1.
    unsigned residue_at(unsigned long e) const;

    /// Coefficient vector for the class of e; Error(MissingResidue) if the
    /// table was hand-edited and lost that class.
    const std::vector<Rational>& coefficients_at(unsigned long e) const;

    /// sum_c phi_c(r_e) p^{ce}, exact.
    Rational evaluate(unsigned long e) const;

    std::string render(RenderFormat format) const;

    /// Schema: { "p": str, "modulus": int, "degree": int, "alpha": int,
    ///           "period": int, "cases": [ { "residue": int,
    ///           "coefficients": [ {"num": str, "den": str}, ... ] } ] }
    /// with coefficients ascending from phi_0 to phi_d, numbers as decimal
    /// strings. render(Json) emits the same document.
    std::string to_json() const;
    static QuasiPolynomial from_json(const std::string& text);

    /// Exact coefficient-table equality. Differing p, modulus, or degree is a
    /// structural error, not inequality.
    bool equals(const QuasiPolynomial& other) const;

private:
    BigInt p_;
    unsigned modulus_;
    unsigned degree_;
    unsigned alpha_;
    unsigned period_;
    std::map<unsigned, std::vector<Rational>> cases_;
    unsigned long group_order_;
    unsigned long leading_rank_;
};

}  // namespace fsig
