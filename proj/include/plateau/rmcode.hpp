#pragma once

// Weight enumerators of the subcodes of R(2, n) spanned by C1 or C2 together
// with all affine functions.

#include "plateau/census.hpp"

#include <cstdint>
#include <vector>

namespace plateau {

struct WeightRow {
    BigInt weight;
    BigInt multiplicity;

    friend bool operator==(const WeightRow&, const WeightRow&) = default;
};

struct WeightEnumerator {
    Family code;
    std::uint64_t n;
    std::vector<WeightRow> rows;  // ascending weight, nonzero multiplicities

    BigInt total() const;
    BigInt multiplicity(const BigInt& weight) const;
};

/// Rows 2^{n-1} +/- 2^{n-1-k/2} with multiplicity A_k = N(n-k) 2^k each, and
/// the middle weight 2^{n-1} with 2^{n+1} G(1) - 2 G(2).
WeightEnumerator weight_enumerator(Family code, std::uint64_t n);

/// A_k as the polynomial W(z) = G(2z).
ZPoly weight_polynomial(Family code, std::uint64_t n);

struct CodeParams {
    BigInt length;
    std::uint64_t dimension;
    BigInt min_distance;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// [2^n, (3n+1)/2, 2^{n-1} - 2^{n-1-r/2}] with r the least prime
/// self-reciprocal degree of x^n + 1. C1 with odd n only.
CodeParams code_params(Family code, std::uint64_t n);

/// Length, log2 of the word count and least nonzero weight, read off the table.
CodeParams code_params_from_enumerator(const WeightEnumerator& we);

}  // namespace plateau
