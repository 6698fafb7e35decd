#pragma once

#include <string>
#include <vector>

#include "fsig/cyclic.hpp"
#include "fsig/cyclotomic.hpp"
#include "fsig/quasi_polynomial.hpp"

namespace fsig {

/// One conjugacy class, described by the eigenvalue exponents of any
/// representative: eigenvalues are zeta_N^{exponents[i]}. The eigenvalue
/// multiset is a class invariant and is trusted from the input.
struct ConjClass {
    std::string label;
    unsigned long size = 0;
    std::vector<unsigned> exponents;  // length d, reduced mod N

    unsigned zero_count() const;  // eigenvalues equal to 1
};

/// A character row: rank (= value at the identity) plus one exact cyclotomic
/// value per conjugacy class, in class order.
struct CharacterRow {
    unsigned long rank = 1;
    std::vector<Cyclotomic> values;
};

/// A finite small group given by conjugacy-class eigenvalue data relative to a
/// common root-of-unity modulus N (typically the group exponent). Construction
/// validates: class sizes sum to |G|, exactly one identity class of size 1,
/// no class with exactly d-1 unit eigenvalues (smallness), and, when character
/// rows are supplied, that the trivial row is present and each row's value at
/// the identity equals its rank. When no rows are supplied the trivial
/// character is synthesized at index 0.
class GroupSpec {
public:
    GroupSpec(unsigned modulus, unsigned dimension, unsigned long order,
              std::vector<ConjClass> classes, std::vector<CharacterRow> characters = {});

    /// Parse + validate the JSON group-spec format (see README / data/).
    static GroupSpec from_json(const std::string& text);
    static GroupSpec from_file(const std::string& path);

    unsigned modulus() const { return modulus_; }
    unsigned dimension() const { return dimension_; }
    unsigned long order() const { return order_; }
    const std::vector<ConjClass>& classes() const { return classes_; }
    const std::vector<CharacterRow>& characters() const { return characters_; }
    const CharacterRow& character(std::size_t index) const;
    std::size_t identity_class() const { return identity_class_; }

private:
    void validate();

    unsigned modulus_;
    unsigned dimension_;
    unsigned long order_;
    std::vector<ConjClass> classes_;
    std::vector<CharacterRow> characters_;
    std::size_t identity_class_ = 0;
};

/// Exponent of lambda^{1/p^e} when lambda = zeta_N^m: m * (p^{-1})^e mod N.
/// Preserves gcd(m, N), hence the order of the root. Error(NonInvertible)
/// when gcd(p, N) > 1.
unsigned twist_exponent(unsigned exponent, unsigned modulus, const BigInt& p, unsigned long e);

/// prod_i sum_{a=0}^{p^e-1} (zeta_N^{twisted m_i})^a for one class. Unit
/// eigenvalues contribute exact factors p^e; the rest reduce to at most
/// ord-1 terms each.
Cyclotomic class_sum(const GroupSpec& spec, const ConjClass& cls, const BigInt& p, unsigned long e);

/// mult(M_alpha, R^{1/p^e}) by the Brauer-character class sum:
///   (1/|G|) sum_classes size * conj(chi^{1/p^e}(class)) * class_sum(...).
/// The character is evaluated on the Frobenius-twisted side (zeta ->
/// zeta^{p^{-e}}), which pins the alpha-labels so that, for cyclic groups,
/// row alpha counts lattice points with weighted sum = alpha mod n --
/// matching multiplicity_qpoly and the brute-force oracle for every alpha.
/// The result must canonicalize to a nonnegative integer; anything else
/// signals inconsistent class/character data (Error NotRational/NotInteger).
Rational multiplicity_general(const GroupSpec& spec, const BigInt& p, unsigned long e,
                              std::size_t char_index);

/// The full quasi-polynomial over the residues of <p> mod N, assembled per
/// class grouped by its count of unit eigenvalues. Postconditions checked:
/// phi_d = rank/|G| and phi_{d-1} = 0. Error(PDividesGroupOrder) when p | |G|.
QuasiPolynomial fsignature_qpoly_general(const GroupSpec& spec, const BigInt& p,
                                         std::size_t char_index = 0);

/// |G_c| for c = 0..d: total size of classes with exactly c unit eigenvalues.
std::vector<unsigned long> pseudoreflection_profile(const GroupSpec& spec);

/// The cyclic group 1/n(t_1,...,t_d) as class data: n singleton classes with
/// exponents (j t_1, ..., j t_d) mod n and the full rank-1 character table
/// chi_alpha(g^j) = zeta_n^{j alpha}.
GroupSpec cyclic_to_group(const CyclicSingularity& sing);

}  // namespace fsig
