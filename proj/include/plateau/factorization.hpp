#pragma once

// Factorization of x^n - 1 over F_p and its grouping into prime
// self-reciprocal factors.

#include "plateau/fieldpoly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace plateau {

struct CyclotomicCoset {
    std::uint64_t representative;        // minimum member
    std::vector<std::uint64_t> members;  // sorted

    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// Orbits of {0, ..., m-1} under multiplication by p, ordered by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t m, const PrimeModulus& p);

/// Multiplicative order of p modulo m (1 for m == 1).
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t m);

struct CyclicFactor {
    FpPoly poly;                  // monic irreducible
    std::uint64_t multiplicity;   // p^v
    std::uint64_t coset_rep;      // representative j of the coset C_j mod m
};

/// Irreducible factors of x^n - 1, one per cyclotomic coset modulo m = n / p^v,
/// built as prod_{i in C_j} (x - alpha^i) from an element alpha of order m.
/// The product of all factors is checked against x^n - 1.
std::vector<CyclicFactor> factor_cyclic(std::uint64_t n, const PrimeModulus& p);

struct SrPrime {
    FpPoly poly;        // monic, self-reciprocal, even degree
    unsigned degree;
    bool irreducible;   // false for a pair g * g^*
};

/// x^n - 1 = (x-1)^{p^v} (x+1)^{[has_x_plus_1] p^v} r_1^{p^v} ... r_k^{p^v}.
/// For p = 2 the single linear factor is x - 1 = x + 1 and has_x_plus_1 is false.
struct SrFactorization {
    PrimeModulus p;
    std::uint64_t n;
    unsigned v;
    std::uint64_t m;
    bool has_x_plus_1;
    std::vector<SrPrime> sr_primes;  // sorted by (degree, coefficients)
    std::uint64_t multiplicity;      // p^v

    std::vector<unsigned> degrees() const;
    /// Re-multiplies all parts.
    FpPoly product() const;
};

/// Splits off the linear parts and pairs every non-self-reciprocal factor with
/// its reciprocal. Throws InvariantViolation when a partner is missing or the
/// bookkeeping identities fail.
SrFactorization group_self_reciprocal(std::span<const CyclicFactor> factors);

inline SrFactorization sr_factorize(std::uint64_t n, const PrimeModulus& p) {
    const auto f = factor_cyclic(n, p);
    return group_self_reciprocal(f);
}

}  // namespace plateau
