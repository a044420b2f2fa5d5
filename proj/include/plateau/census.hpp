#pragma once

// Plateau distributions of the idempotent / p-potent quadratic families.
//
//   C1 (p = 2, any n):   Tr_n(sum_{1 <= i <= (n-1)/2} a_i x^{2^i+1})
//   C2 (p = 2, even n):  C1 terms up to n/2 - 1, plus Tr_{n/2}(a_{n/2} x^{2^{n/2}+1})
//   D  (odd p, any n):   Tr_n(sum_{0 <= i <= n/2} a_i x^{p^i+1})
//
// with all a_i in the prime field, the zero function included. The generating
// polynomial of a family has coefficient of z^t equal to the number of
// (n - t)-plateaued members.

#include "plateau/counting.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plateau {

enum class Family { C1, C2, D };

std::string family_name(Family f);
/// Accepts "C1", "C2", "D" (case-insensitive); throws UsageError otherwise.
Family parse_family(const std::string& s);

struct FamilyId {
    Family tag;
    std::uint32_t p;
    std::uint64_t n;

    /// Throws UsageError when the family constraints do not hold.
    void validate() const;
    BigInt size() const;
    /// Number of free coefficients a_i.
    std::size_t tuple_length() const;
    std::string to_string() const;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Closed-form generating polynomial from the product theorems.
ZPoly gen_poly(const FamilyId& family);
ZPoly gen_poly(const FamilyId& family, const SrFactorization& sr);

/// Coefficient-by-coefficient assembly from N_n(f; t) over the divisor monoid.
ZPoly gen_poly_via_propositions(const FamilyId& family);
ZPoly gen_poly_via_propositions(const FamilyId& family, const SrFactorization& sr);

struct PlateauDistribution {
    FamilyId family;
    std::map<unsigned, BigInt> counts;  // s -> count, nonzero entries only

    static PlateauDistribution from_gen_poly(const FamilyId& family, const ZPoly& g);
    BigInt total() const;
    BigInt at(unsigned s) const;
    /// Empty when all structural invariants hold, otherwise a description of the first failure.
    std::optional<std::string> check_invariants(unsigned v) const;

    friend bool operator==(const PlateauDistribution&, const PlateauDistribution&) = default;
};

struct PrintedCorollary {
    std::string quantity;  // "bent" or "semibent"
    BigRational value;
    bool consistent;       // equals the coefficient-extraction value
    std::string label;
};

struct SpecialCounts {
    BigInt bent;
    BigInt semibent;
    unsigned semibent_s;
    std::vector<PrintedCorollary> printed;
};

/// Bent and semi-bent counts by coefficient extraction, plus the closed-form
/// corollary values recomputed for comparison where such formulas exist.
SpecialCounts special_counts(const FamilyId& family);

}  // namespace plateau
