#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fsig/quasi_polynomial.hpp"
#include "fsig/rational.hpp"

namespace fsig {

/// The data 1/n(t_1,...,t_d) of a cyclic quotient singularity: the group of
/// order n acting on d variables by diag(zeta^{t_1}, ..., zeta^{t_d}).
/// Construct through validate_singularity.
struct CyclicSingularity {
    unsigned order;                 // n
    std::vector<unsigned> weights;  // t_i, reduced mod n

    unsigned dimension() const { return static_cast<unsigned>(weights.size()); }
};

/// Reduces weights mod n and checks faithfulness (gcd(t_1,...,t_d,n) = 1) and
/// smallness (gcd of every (d-1)-subset of weights with n is 1). Throws
/// Error(NotFaithful) / Error(NotSmall) with the offending data and a fix.
CyclicSingularity validate_singularity(unsigned order, const std::vector<long long>& weights);

/// g_J = gcd({t_j : j in J} + {n}) for every subset J of coordinates, with
/// g_empty = n. Subsets are bitmasks over the weight indices.
struct SubsetProfile {
    unsigned dimension;
    std::vector<unsigned> gcds;  // indexed by mask, size 2^d

    unsigned g(std::uint32_t subset) const { return gcds[subset]; }
};

/// All 2^d subset gcds; Error(DimensionTooLarge) for d > 24.
SubsetProfile subset_gcds(const CyclicSingularity& sing);

/// theta_J^{(alpha)}(r): number of (d-|J|)-tuples over [0, r-1] of the
/// coordinates outside J whose weighted sum is alpha mod g_J. Computed by a
/// residue-histogram convolution over Z/g_J, not by enumerating tuples.
/// Requires 0 < r < n. theta over the full subset is 1 for every alpha.
BigInt theta(const CyclicSingularity& sing, std::uint32_t subset, unsigned alpha, unsigned residue);

/// psi_i^{(alpha)}(r) = sum over |J| = i of g_J * theta_J^{(alpha)}(r).
BigInt psi(const CyclicSingularity& sing, unsigned i, unsigned alpha, unsigned residue);

/// phi_c^{(alpha)}(r) = (1/n) sum_{i=c}^{d} (-1)^{i-c} C(i,c) psi_i^{(alpha)} r^{i-c},
/// the exact coefficient of p^{ce} on the residue class r.
Rational phi(const CyclicSingularity& sing, unsigned c, unsigned alpha, unsigned residue);

/// The full quasi-polynomial of mult(M_alpha, R^{1/p^e}) over the residues of
/// <p> mod n. alpha = 0 is the F-signature function. Error(PDividesGroupOrder)
/// when p | n.
QuasiPolynomial multiplicity_qpoly(const CyclicSingularity& sing, const BigInt& p, unsigned alpha);

inline constexpr unsigned long long kDefaultOracleCap = 100'000'000ULL;

/// Independent oracle: literally enumerates (a_1,...,a_d) in [0, p^e-1]^d and
/// counts tuples with sum t_i a_i = alpha mod n, for every alpha at once.
/// Shares no counting logic with theta/psi/phi. Error(CapExceeded) when
/// p^{ed} > cap.
std::vector<BigInt> brute_force_all(const CyclicSingularity& sing, const BigInt& p,
                                    unsigned long e, unsigned long long cap = kDefaultOracleCap);

BigInt brute_force_mult(const CyclicSingularity& sing, const BigInt& p, unsigned long e,
                        unsigned alpha, unsigned long long cap = kDefaultOracleCap);

/// Number of solutions of t_1 x_1 + ... + t_i x_i = b mod n over (Z/n)^i:
/// g * n^{i-1} when g = gcd(t_1,...,t_i,n) divides b, else 0. An empty
/// coefficient list has the single empty solution exactly when n | b.
BigInt congruence_count(const std::vector<long long>& coefficients, unsigned modulus, long long target);

/// Vanishing analysis of the FS coefficients. first_nonzero is the largest
/// c < d carrying some g_J > 1 over the size-c subsets (none when n = 1);
/// phi_{d-1}, ..., phi_{first_nonzero+1} vanish identically and
/// phi_{first_nonzero} does not. reflection_counts[c] = |G_c|, the number of
/// group elements fixing exactly a c-dimensional subspace.
struct VanishingProfile {
    std::optional<unsigned> first_nonzero;
    std::vector<unsigned long> reflection_counts;  // c = 0..d
};

VanishingProfile vanishing_profile(const CyclicSingularity& sing);

/// Closed form (psi_ell - C(d,ell) r^{d-ell}) / n for the first non-vanishing
/// coefficient, exposed for cross-checking against phi().
Rational phi_first_nonzero_closed_form(const CyclicSingularity& sing, unsigned ell, unsigned residue);

}  // namespace fsig
