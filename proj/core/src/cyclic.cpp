#include "fsig/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fsig {

namespace {

constexpr unsigned kMaxSubsetDim = 24;

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }

std::string weights_str(const std::vector<unsigned>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

// Count of a in [0, r-1] with a = b mod g.
unsigned long residue_count(unsigned r, unsigned g, unsigned b) {
    if (b >= r) return 0;
    return (r - 1 - b) / g + 1;
}

// theta for a known subset gcd g and the free weights outside the subset.
// Counts over [0, r-1]^{#free} with weighted sum = alpha mod g, by convolving
// per-coordinate residue histograms over Z/g. Fits-in-64-bit cases skip GMP.
BigInt theta_dp(unsigned g, const std::vector<unsigned>& free_weights, unsigned alpha, unsigned r) {
    if (g == 1) return pow_big(BigInt(static_cast<unsigned long>(r)),
                               static_cast<unsigned long>(free_weights.size()));
    const unsigned target = alpha % g;

    // r^k <= 2^62 allows a machine-word DP; otherwise use BigInt cells.
    double bits = static_cast<double>(free_weights.size()) *
                  std::log2(static_cast<double>(std::max(2u, r)));
    if (bits < 62.0) {
        std::vector<unsigned long long> dist(g, 0);
        dist[0] = 1;
        std::vector<unsigned long long> hist(g), next(g);
        for (unsigned w : free_weights) {
            std::fill(hist.begin(), hist.end(), 0ULL);
            const unsigned wg = w % g;
            for (unsigned b = 0; b < g; ++b) {
                unsigned long cnt = residue_count(r, g, b);
                if (cnt) hist[(static_cast<unsigned long>(b) * wg) % g] += cnt;
            }
            std::fill(next.begin(), next.end(), 0ULL);
            for (unsigned u = 0; u < g; ++u) {
                if (!dist[u]) continue;
                for (unsigned v = 0; v < g; ++v) {
                    if (hist[v]) next[(u + v) % g] += dist[u] * hist[v];
                }
            }
            dist.swap(next);
        }
        return BigInt(static_cast<unsigned long>(dist[target]));
    }

    std::vector<BigInt> dist(g, 0);
    dist[0] = 1;
    for (unsigned w : free_weights) {
        std::vector<BigInt> hist(g, 0), next(g, 0);
        const unsigned wg = w % g;
        for (unsigned b = 0; b < g; ++b) {
            unsigned long cnt = residue_count(r, g, b);
            if (cnt) hist[(static_cast<unsigned long>(b) * wg) % g] += cnt;
        }
        for (unsigned u = 0; u < g; ++u) {
            if (dist[u] == 0) continue;
            for (unsigned v = 0; v < g; ++v) {
                if (hist[v] != 0) next[(u + v) % g] += dist[u] * hist[v];
            }
        }
        dist = std::move(next);
    }
    return dist[target];
}

void require_residue(const CyclicSingularity& sing, unsigned residue) {
    if (residue == 0 || residue >= sing.order) {
        throw Error(ErrorCode::InvalidInput,
                    "residue " + std::to_string(residue) + " out of range (0, " +
                        std::to_string(sing.order) + ")");
    }
}

// psi_0..psi_d in one sweep over subsets, sharing the gcd profile.
std::vector<BigInt> psi_all(const CyclicSingularity& sing, const SubsetProfile& profile,
                            unsigned alpha, unsigned r) {
    const unsigned d = sing.dimension();
    std::vector<BigInt> out(d + 1, 0);
    std::vector<unsigned> free_weights;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        const unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
        const unsigned g = profile.g(mask);
        free_weights.clear();
        for (unsigned j = 0; j < d; ++j)
            if (!(mask >> j & 1)) free_weights.push_back(sing.weights[j]);
        out[size] += BigInt(static_cast<unsigned long>(g)) * theta_dp(g, free_weights, alpha, r);
    }
    return out;
}

std::vector<Rational> phi_vector(const CyclicSingularity& sing, const std::vector<BigInt>& psis,
                                 unsigned r) {
    const unsigned d = sing.dimension();
    std::vector<Rational> coeffs(d + 1);
    for (unsigned c = 0; c <= d; ++c) {
        BigInt total = 0;
        BigInt r_pow = 1;  // r^{i-c}
        for (unsigned i = c; i <= d; ++i) {
            BigInt term = binomial(i, c) * psis[i] * r_pow;
            if ((i - c) % 2 == 0) total += term; else total -= term;
            r_pow *= r;
        }
        coeffs[c] = Rational(total, BigInt(static_cast<unsigned long>(sing.order)));
    }
    return coeffs;
}

}  // namespace

CyclicSingularity validate_singularity(unsigned order, const std::vector<long long>& weights) {
    if (order == 0) throw Error(ErrorCode::InvalidInput, "n must be >= 1");
    if (weights.empty()) throw Error(ErrorCode::InvalidInput, "at least one weight is required");

    CyclicSingularity sing;
    sing.order = order;
    sing.weights.reserve(weights.size());
    for (long long t : weights) {
        long long w = t % static_cast<long long>(order);
        if (w < 0) w += order;
        sing.weights.push_back(static_cast<unsigned>(w));
    }

    unsigned g = order;
    for (unsigned w : sing.weights) g = gcd_u(g, w);
    if (g != 1) {
        throw Error(ErrorCode::NotFaithful,
                    "gcd(t_1,...,t_d,n) = " + std::to_string(g) +
                        " > 1: the action of 1/" + std::to_string(order) + "(" +
                        weights_str(sing.weights) + ") is not faithful; divide n and all " +
                        "weights by " + std::to_string(g));
    }

    const unsigned d = sing.dimension();
    for (unsigned skip = 0; skip < d; ++skip) {
        unsigned gs = order;
        for (unsigned j = 0; j < d; ++j)
            if (j != skip) gs = gcd_u(gs, sing.weights[j]);
        if (gs != 1) {
            std::string subset;
            for (unsigned j = 0; j < d; ++j)
                if (j != skip) subset += (subset.empty() ? "" : ",") + std::to_string(j + 1);
            throw Error(ErrorCode::NotSmall,
                        "gcd of weights {" + subset + "} with n is " + std::to_string(gs) +
                            ": g^" + std::to_string(order / gs) +
                            " is a pseudoreflection; quotient by it and pass the smaller " +
                            "singularity instead");
        }
    }
    return sing;
}

SubsetProfile subset_gcds(const CyclicSingularity& sing) {
    const unsigned d = sing.dimension();
    if (d > kMaxSubsetDim) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "d = " + std::to_string(d) + " exceeds the subset-enumeration cap of " +
                        std::to_string(kMaxSubsetDim));
    }
    SubsetProfile profile;
    profile.dimension = d;
    profile.gcds.resize(1u << d);
    profile.gcds[0] = sing.order;
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
        profile.gcds[mask] = gcd_u(profile.gcds[mask & (mask - 1)], sing.weights[low]);
    }
    return profile;
}

BigInt theta(const CyclicSingularity& sing, std::uint32_t subset, unsigned alpha, unsigned residue) {
    const unsigned d = sing.dimension();
    if (d > kMaxSubsetDim) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "d = " + std::to_string(d) + " exceeds the subset-enumeration cap of " +
                        std::to_string(kMaxSubsetDim));
    }
    if (subset >= (1u << d)) throw Error(ErrorCode::InvalidInput, "subset mask out of range");
    require_residue(sing, residue);
    unsigned g = sing.order;
    std::vector<unsigned> free_weights;
    for (unsigned j = 0; j < d; ++j) {
        if (subset >> j & 1) g = gcd_u(g, sing.weights[j]);
        else free_weights.push_back(sing.weights[j]);
    }
    return theta_dp(g, free_weights, alpha % sing.order, residue);
}

BigInt psi(const CyclicSingularity& sing, unsigned i, unsigned alpha, unsigned residue) {
    const unsigned d = sing.dimension();
    if (i > d) throw Error(ErrorCode::InvalidInput, "psi: subset size exceeds dimension");
    require_residue(sing, residue);
    return psi_all(sing, subset_gcds(sing), alpha % sing.order, residue)[i];
}

Rational phi(const CyclicSingularity& sing, unsigned c, unsigned alpha, unsigned residue) {
    const unsigned d = sing.dimension();
    if (c > d) throw Error(ErrorCode::InvalidInput, "phi: coefficient index exceeds dimension");
    require_residue(sing, residue);
    return phi_vector(sing, psi_all(sing, subset_gcds(sing), alpha % sing.order, residue),
                      residue)[c];
}

QuasiPolynomial multiplicity_qpoly(const CyclicSingularity& sing, const BigInt& p, unsigned alpha) {
    const unsigned n = sing.order;
    const unsigned d = sing.dimension();
    if (n > 1 && std::gcd(mod_ui(p, n), static_cast<unsigned long>(n)) != 1) {
        throw Error(ErrorCode::PDividesGroupOrder,
                    "p = " + p.get_str() + " divides the group order " + std::to_string(n));
    }
    std::map<unsigned, std::vector<Rational>> cases;
    if (n == 1) {
        std::vector<Rational> coeffs(d + 1, Rational(0));
        coeffs[d] = Rational(1);
        cases.emplace(0, std::move(coeffs));  // FS(e) = p^{de} for the trivial group
    } else {
        const SubsetProfile profile = subset_gcds(sing);
        const unsigned a = alpha % n;
        const unsigned long step = mod_ui(p, n);
        unsigned long r = step;
        while (true) {
            const unsigned ru = static_cast<unsigned>(r);
            cases.emplace(ru, phi_vector(sing, psi_all(sing, profile, a, ru), ru));
            if (ru == 1) break;
            r = (r * step) % n;
        }
    }
    return QuasiPolynomial(p, n, d, alpha % n, std::move(cases), n, 1);
}

std::vector<BigInt> brute_force_all(const CyclicSingularity& sing, const BigInt& p,
                                    unsigned long e, unsigned long long cap) {
    const unsigned n = sing.order;
    const unsigned d = sing.dimension();
    const BigInt points = pow_big(p, e * d);
    if (points > BigInt(static_cast<unsigned long>(cap))) {
        throw Error(ErrorCode::CapExceeded,
                    "p^{ed} = " + points.get_str() + " exceeds the enumeration cap " +
                        std::to_string(cap));
    }
    const unsigned long long side = pow_big(p, e).get_ui();

    std::vector<unsigned long long> counts(n, 0);
    // Odometer over [0, side-1]^d carrying the weighted sum mod n; the last
    // coordinate is unrolled as a strided walk.
    std::vector<unsigned long long> digit(d, 0);
    std::vector<unsigned> partial(d + 1, 0);  // partial[i] = sum of first i coordinates mod n
    const unsigned last_step = sing.weights[d - 1] % n;
    while (true) {
        unsigned res = partial[d - 1];
        for (unsigned long long a = 0; a < side; ++a) {
            ++counts[res];
            res += last_step;
            if (res >= n) res -= n;
        }
        if (d == 1) break;
        int i = static_cast<int>(d) - 2;
        while (i >= 0) {
            ++digit[i];
            if (digit[i] < side) break;
            digit[i] = 0;
            --i;
        }
        if (i < 0) break;  // every digit wrapped
        // digits above i are zero again; refresh the partial sums upward
        partial[i + 1] = (partial[i] + static_cast<unsigned>((digit[i] % n) *
                                                             sing.weights[i] % n)) % n;
        for (unsigned k = static_cast<unsigned>(i) + 1; k < d - 1; ++k) partial[k + 1] = partial[k];
    }

    std::vector<BigInt> out;
    out.reserve(n);
    for (unsigned long long c : counts) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

BigInt brute_force_mult(const CyclicSingularity& sing, const BigInt& p, unsigned long e,
                        unsigned alpha, unsigned long long cap) {
    return brute_force_all(sing, p, e, cap)[alpha % sing.order];
}

BigInt congruence_count(const std::vector<long long>& coefficients, unsigned modulus,
                        long long target) {
    if (modulus == 0) throw Error(ErrorCode::InvalidInput, "congruence_count: modulus must be >= 1");
    unsigned g = modulus;
    for (long long t : coefficients) {
        long long w = t % static_cast<long long>(modulus);
        if (w < 0) w += modulus;
        g = gcd_u(g, static_cast<unsigned>(w));
    }
    long long b = target % static_cast<long long>(g);
    if (b != 0) return 0;
    if (coefficients.empty()) return 1;  // the empty solution, iff g = n divides b
    return BigInt(static_cast<unsigned long>(g)) *
           pow_big(BigInt(static_cast<unsigned long>(modulus)),
                   static_cast<unsigned long>(coefficients.size()) - 1);
}

VanishingProfile vanishing_profile(const CyclicSingularity& sing) {
    const unsigned n = sing.order;
    const unsigned d = sing.dimension();
    VanishingProfile out;
    out.reflection_counts.assign(d + 1, 0);
    for (unsigned j = 0; j < n; ++j) {
        unsigned zeros = 0;
        for (unsigned w : sing.weights)
            if ((static_cast<unsigned long>(j) * w) % n == 0) ++zeros;
        ++out.reflection_counts[zeros];
    }
    const SubsetProfile profile = subset_gcds(sing);
    for (unsigned c = d; c-- > 0;) {
        bool has_nontrivial = false;
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) == c && profile.g(mask) > 1) {
                has_nontrivial = true;
                break;
            }
        }
        if (has_nontrivial) {
            out.first_nonzero = c;
            break;
        }
    }
    return out;
}

Rational phi_first_nonzero_closed_form(const CyclicSingularity& sing, unsigned ell,
                                       unsigned residue) {
    const unsigned d = sing.dimension();
    if (ell >= d) throw Error(ErrorCode::InvalidInput, "closed form applies to ell < d");
    require_residue(sing, residue);
    BigInt value = psi(sing, ell, 0, residue) -
                   binomial(d, ell) * pow_big(BigInt(static_cast<unsigned long>(residue)),
                                              static_cast<unsigned long>(d - ell));
    return Rational(value, BigInt(static_cast<unsigned long>(sing.order)));
}

}  // namespace fsig
