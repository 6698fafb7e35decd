#pragma once

#include <stdexcept>
#include <string>

namespace fsig {

enum class ErrorCode {
    InvalidInput,        // malformed parameters, files, or JSON
    NotFaithful,         // gcd(t_1,...,t_d,n) > 1
    NotSmall,            // some (d-1)-subset of weights shares a factor with n
    DimensionTooLarge,   // subset enumeration cap (d > 24)
    PDividesGroupOrder,  // p | |G|
    CapExceeded,         // brute-force enumeration would exceed the point cap
    NotRational,         // cyclotomic value has a non-constant coefficient
    NotInteger,          // multiplicity failed the nonnegative-integer check
    MissingResidue,      // residue class absent from a coefficient table
    StructuralMismatch,  // comparing quasi-polynomials with different p, n, or d
    NonInvertible,       // gcd(p, N) > 1, no Frobenius twist
    SmallnessViolation,  // group class with exactly d-1 unit eigenvalues
    OrderMismatch,       // mixing cyclotomics of different orders
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fsig
