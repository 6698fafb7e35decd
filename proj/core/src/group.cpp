#include "fsig/group.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

namespace fsig {

unsigned ConjClass::zero_count() const {
    unsigned zeros = 0;
    for (unsigned m : exponents)
        if (m == 0) ++zeros;
    return zeros;
}

namespace {

// (p^{-1})^e mod N; 0 stands in for the trivial modulus N = 1.
unsigned long inverse_power(const BigInt& p, unsigned modulus, unsigned long e) {
    if (modulus == 1) return 0;
    BigInt inv, mod(static_cast<unsigned long>(modulus));
    if (mpz_invert(inv.get_mpz_t(), p.get_mpz_t(), mod.get_mpz_t()) == 0) {
        throw Error(ErrorCode::NonInvertible,
                    "gcd(" + p.get_str() + ", " + std::to_string(modulus) +
                        ") > 1: no Frobenius twist");
    }
    return powmod_ui(inv, e, modulus);
}

Rational parse_coefficient(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational::from_decimal_strings(text, "1");
    return Rational::from_decimal_strings(text.substr(0, slash), text.substr(slash + 1));
}

Cyclotomic parse_cyclotomic(unsigned modulus, const nlohmann::json& terms) {
    Cyclotomic value(modulus);
    for (const auto& term : terms) {
        if (!term.is_array() || term.size() != 2) {
            throw Error(ErrorCode::InvalidInput,
                        "character value terms must be [exponent, \"coefficient\"] pairs");
        }
        const long exponent = term.at(0).get<long>();
        Rational coeff = term.at(1).is_string() ? parse_coefficient(term.at(1).get<std::string>())
                                                : Rational(term.at(1).get<long>());
        value += Cyclotomic::root_of_unity(modulus, exponent) * coeff;
    }
    return value;
}

}  // namespace

GroupSpec::GroupSpec(unsigned modulus, unsigned dimension, unsigned long order,
                     std::vector<ConjClass> classes, std::vector<CharacterRow> characters)
    : modulus_(modulus),
      dimension_(dimension),
      order_(order),
      classes_(std::move(classes)),
      characters_(std::move(characters)) {
    validate();
}

void GroupSpec::validate() {
    if (modulus_ == 0) throw Error(ErrorCode::InvalidInput, "group spec: N must be >= 1");
    if (dimension_ == 0) throw Error(ErrorCode::InvalidInput, "group spec: d must be >= 1");
    if (order_ == 0) throw Error(ErrorCode::InvalidInput, "group spec: order must be >= 1");
    if (classes_.empty()) throw Error(ErrorCode::InvalidInput, "group spec: no conjugacy classes");

    unsigned long total = 0;
    std::size_t identity_count = 0;
    for (auto& cls : classes_) {
        if (cls.exponents.size() != dimension_) {
            throw Error(ErrorCode::InvalidInput,
                        "class '" + cls.label + "' has " + std::to_string(cls.exponents.size()) +
                            " exponents, expected " + std::to_string(dimension_));
        }
        if (cls.size == 0)
            throw Error(ErrorCode::InvalidInput, "class '" + cls.label + "' has size 0");
        for (unsigned& m : cls.exponents) m %= modulus_;
        total += cls.size;
        const unsigned zeros = cls.zero_count();
        if (zeros == dimension_) {
            identity_class_ = static_cast<std::size_t>(&cls - classes_.data());
            ++identity_count;
            if (cls.size != 1) {
                throw Error(ErrorCode::InvalidInput,
                            "identity class '" + cls.label + "' must have size 1");
            }
        } else if (dimension_ >= 1 && zeros == dimension_ - 1) {
            throw Error(ErrorCode::SmallnessViolation,
                        "class '" + cls.label + "' has exactly d-1 unit eigenvalues: the group " +
                            "contains pseudoreflections and is not small");
        }
    }
    if (identity_count != 1) {
        throw Error(ErrorCode::InvalidInput,
                    "group spec must contain exactly one identity class (all exponents 0), found " +
                        std::to_string(identity_count));
    }
    if (total != order_) {
        throw Error(ErrorCode::InvalidInput,
                    "class sizes sum to " + std::to_string(total) + ", expected |G| = " +
                        std::to_string(order_));
    }

    if (characters_.empty()) {
        CharacterRow trivial;
        trivial.rank = 1;
        trivial.values.assign(classes_.size(), Cyclotomic(modulus_, Rational(1)));
        characters_.push_back(std::move(trivial));
        return;
    }
    bool has_trivial = false;
    for (const auto& row : characters_) {
        if (row.values.size() != classes_.size()) {
            throw Error(ErrorCode::InvalidInput,
                        "character row has " + std::to_string(row.values.size()) +
                            " values, expected one per class");
        }
        for (const auto& v : row.values) {
            if (v.order() != modulus_)
                throw Error(ErrorCode::OrderMismatch, "character values must live in Q(zeta_N)");
        }
        const Cyclotomic& at_identity = row.values[identity_class_];
        if (!at_identity.is_rational() ||
            at_identity.as_rational() != Rational(BigInt(row.rank))) {
            throw Error(ErrorCode::InvalidInput,
                        "character value at the identity must equal the rank " +
                            std::to_string(row.rank));
        }
        if (row.rank == 1) {
            bool all_ones = true;
            for (const auto& v : row.values)
                if (!(v.is_rational() && v.as_rational() == Rational(1))) all_ones = false;
            if (all_ones) has_trivial = true;
        }
    }
    if (!has_trivial) {
        throw Error(ErrorCode::InvalidInput,
                    "character table must include the trivial row (rank 1, all values 1)");
    }
}

const CharacterRow& GroupSpec::character(std::size_t index) const {
    if (index >= characters_.size()) {
        throw Error(ErrorCode::InvalidInput,
                    "character index " + std::to_string(index) + " out of range (" +
                        std::to_string(characters_.size()) + " rows)");
    }
    return characters_[index];
}

GroupSpec GroupSpec::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("bad group-spec JSON: ") + e.what());
    }
    try {
        const unsigned modulus = doc.at("N").get<unsigned>();
        const unsigned dimension = doc.at("d").get<unsigned>();
        const unsigned long order = doc.at("order").get<unsigned long>();
        std::vector<ConjClass> classes;
        for (const auto& entry : doc.at("classes")) {
            ConjClass cls;
            cls.label = entry.value("label", "class" + std::to_string(classes.size()));
            cls.size = entry.at("size").get<unsigned long>();
            for (const auto& m : entry.at("exponents")) {
                long v = m.get<long>() % static_cast<long>(modulus);
                if (v < 0) v += modulus;
                cls.exponents.push_back(static_cast<unsigned>(v));
            }
            classes.push_back(std::move(cls));
        }
        std::vector<CharacterRow> characters;
        if (doc.contains("characters")) {
            for (const auto& entry : doc.at("characters")) {
                CharacterRow row;
                row.rank = entry.at("rank").get<unsigned long>();
                for (const auto& value : entry.at("values"))
                    row.values.push_back(parse_cyclotomic(modulus, value));
                characters.push_back(std::move(row));
            }
        }
        return GroupSpec(modulus, dimension, order, std::move(classes), std::move(characters));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("bad group-spec JSON: ") + e.what());
    }
}

GroupSpec GroupSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open group spec '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

unsigned twist_exponent(unsigned exponent, unsigned modulus, const BigInt& p, unsigned long e) {
    if (modulus == 0) throw Error(ErrorCode::InvalidInput, "twist_exponent: N must be >= 1");
    if (modulus == 1) return 0;
    const unsigned long q = inverse_power(p, modulus, e);
    return static_cast<unsigned>((static_cast<unsigned long>(exponent % modulus) * q) % modulus);
}

Cyclotomic class_sum(const GroupSpec& spec, const ConjClass& cls, const BigInt& p,
                     unsigned long e) {
    const unsigned modulus = spec.modulus();
    const BigInt length = pow_big(p, e);
    Cyclotomic product(modulus, Rational(1));
    for (unsigned m : cls.exponents) {
        product *= geom_sum(modulus, static_cast<long>(twist_exponent(m, modulus, p, e)), length);
    }
    return product;
}

namespace {

// Shared core of the pointwise and per-residue evaluations. The character is
// taken through the same Frobenius twist as the eigenvalue exponents
// (zeta -> zeta^{q}, q = (p^{-1})^e), so for cyclic groups the row labelled
// alpha counts lattice points with weighted sum = alpha mod n at every e --
// the same function as multiplicity_qpoly and the brute-force oracle.
Rational multiplicity_at(const GroupSpec& spec, const CharacterRow& row, unsigned long q,
                         const BigInt& length) {
    const unsigned modulus = spec.modulus();
    Cyclotomic total(modulus);
    for (std::size_t k = 0; k < spec.classes().size(); ++k) {
        const ConjClass& cls = spec.classes()[k];
        Cyclotomic product(modulus, Rational(1));
        for (unsigned m : cls.exponents) {
            const unsigned twisted =
                modulus == 1 ? 0
                             : static_cast<unsigned>((static_cast<unsigned long>(m) * q) % modulus);
            product *= geom_sum(modulus, static_cast<long>(twisted), length);
        }
        Cyclotomic chi = row.values[k];
        if (modulus > 1 && q != 1) chi = chi.galois(static_cast<unsigned>(q % modulus));
        product *= chi.conjugate();
        product *= Rational(BigInt(cls.size));
        total += product;
    }
    Rational value = total.as_rational() / Rational(BigInt(spec.order()));
    if (!value.is_integer() || value.sign() < 0) {
        throw Error(ErrorCode::NotInteger,
                    "multiplicity " + value.str() +
                        " is not a nonnegative integer: inconsistent class/character data");
    }
    return value;
}

}  // namespace

Rational multiplicity_general(const GroupSpec& spec, const BigInt& p, unsigned long e,
                              std::size_t char_index) {
    const CharacterRow& row = spec.character(char_index);
    const unsigned long q = spec.modulus() == 1 ? 1 : inverse_power(p, spec.modulus(), e);
    return multiplicity_at(spec, row, q, pow_big(p, e));
}

QuasiPolynomial fsignature_qpoly_general(const GroupSpec& spec, const BigInt& p,
                                         std::size_t char_index) {
    const unsigned modulus = spec.modulus();
    const unsigned d = spec.dimension();
    const CharacterRow& row = spec.character(char_index);
    const BigInt order_big(spec.order());
    if (mpz_divisible_p(order_big.get_mpz_t(), p.get_mpz_t())) {
        throw Error(ErrorCode::PDividesGroupOrder,
                    "p = " + p.get_str() + " divides |G| = " + std::to_string(spec.order()));
    }
    if (modulus > 1 && std::gcd(mod_ui(p, modulus), static_cast<unsigned long>(modulus)) != 1) {
        throw Error(ErrorCode::NonInvertible,
                    "gcd(p, N) > 1: eigenvalue exponents cannot be twisted");
    }

    std::map<unsigned, std::vector<Rational>> cases;
    if (modulus == 1) {
        // Trivial group: FS(e) = p^{de}.
        std::vector<Rational> coeffs(d + 1, Rational(0));
        coeffs[d] = Rational(BigInt(row.rank));
        cases.emplace(0, std::move(coeffs));
    } else {
        const unsigned long step = mod_ui(p, modulus);
        unsigned long r = step;
        while (true) {
            const unsigned ru = static_cast<unsigned>(r);
            BigInt rinv_b;
            BigInt mod(static_cast<unsigned long>(modulus));
            BigInt rb(static_cast<unsigned long>(ru));
            mpz_invert(rinv_b.get_mpz_t(), rb.get_mpz_t(), mod.get_mpz_t());
            const unsigned long q = rinv_b.get_ui();  // (p^{-1})^e mod N for this class of e

            std::vector<Cyclotomic> sums(d + 1, Cyclotomic(modulus));
            for (std::size_t k = 0; k < spec.classes().size(); ++k) {
                const ConjClass& cls = spec.classes()[k];
                Cyclotomic product(modulus, Rational(1));
                for (unsigned m : cls.exponents) {
                    if (m == 0) continue;  // contributes the exact factor p^e
                    const unsigned twisted =
                        static_cast<unsigned>((static_cast<unsigned long>(m) * q) % modulus);
                    product *= geom_sum(modulus, static_cast<long>(twisted),
                                        BigInt(static_cast<unsigned long>(ru)));
                }
                Cyclotomic chi = row.values[k];
                if (q != 1) chi = chi.galois(static_cast<unsigned>(q % modulus));
                product *= chi.conjugate();
                product *= Rational(BigInt(cls.size));
                sums[cls.zero_count()] += product;
            }
            std::vector<Rational> coeffs(d + 1);
            for (unsigned c = 0; c <= d; ++c)
                coeffs[c] = sums[c].as_rational() / Rational(BigInt(spec.order()));

            if (coeffs[d] != Rational(BigInt(row.rank), BigInt(spec.order()))) {
                throw Error(ErrorCode::NotInteger, "leading coefficient != rank/|G|");
            }
            if (d >= 1 && !coeffs[d - 1].is_zero()) {
                throw Error(ErrorCode::NotInteger, "coefficient of p^{(d-1)e} is nonzero");
            }
            cases.emplace(ru, std::move(coeffs));
            if (ru == 1) break;
            r = (r * step) % modulus;
        }
    }
    return QuasiPolynomial(p, modulus, d, static_cast<unsigned>(char_index), std::move(cases),
                           spec.order(), row.rank);
}

std::vector<unsigned long> pseudoreflection_profile(const GroupSpec& spec) {
    std::vector<unsigned long> counts(spec.dimension() + 1, 0);
    for (const ConjClass& cls : spec.classes()) counts[cls.zero_count()] += cls.size;
    return counts;
}

GroupSpec cyclic_to_group(const CyclicSingularity& sing) {
    const unsigned n = sing.order;
    const unsigned d = sing.dimension();
    std::vector<ConjClass> classes;
    classes.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        ConjClass cls;
        cls.label = "g^" + std::to_string(j);
        cls.size = 1;
        cls.exponents.reserve(d);
        for (unsigned w : sing.weights)
            cls.exponents.push_back(static_cast<unsigned>((static_cast<unsigned long>(j) * w) % n));
        classes.push_back(std::move(cls));
    }
    std::vector<CharacterRow> characters;
    characters.reserve(n);
    for (unsigned alpha = 0; alpha < n; ++alpha) {
        CharacterRow row;
        row.rank = 1;
        row.values.reserve(n);
        for (unsigned j = 0; j < n; ++j) {
            row.values.push_back(Cyclotomic::root_of_unity(
                n, static_cast<long>((static_cast<unsigned long>(j) * alpha) % n)));
        }
        characters.push_back(std::move(row));
    }
    return GroupSpec(n, d, n, std::move(classes), std::move(characters));
}

}  // namespace fsig
