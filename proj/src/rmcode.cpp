#include "plateau/rmcode.hpp"

#include "plateau/errors.hpp"

#include <algorithm>

namespace plateau {

namespace {

FamilyId code_family(Family code, std::uint64_t n) {
    if (code == Family::D) throw UsageError("Reed-Muller subcodes are defined for p = 2 (C1 or C2) only");
    FamilyId f{code, 2, n};
    f.validate();
    return f;
}

}  // namespace

BigInt WeightEnumerator::total() const {
    BigInt t = 0;
    for (const auto& r : rows) t += r.multiplicity;
    return t;
}

BigInt WeightEnumerator::multiplicity(const BigInt& weight) const {
    for (const auto& r : rows)
        if (r.weight == weight) return r.multiplicity;
    return 0;
}

ZPoly weight_polynomial(Family code, std::uint64_t n) {
    return gen_poly(code_family(code, n)).scale_argument(2);
}

WeightEnumerator weight_enumerator(Family code, std::uint64_t n) {
    const FamilyId fam = code_family(code, n);
    const ZPoly g = gen_poly(fam);
    const ZPoly w = g.scale_argument(2);
    const BigInt half = ipow(2, n - 1);

    WeightEnumerator out{code, n, {}};
    for (std::ptrdiff_t k = 0; k <= w.degree(); ++k) {
        const BigInt a = w.coeff(k);
        if (a == 0) continue;
        if (k % 2 != 0) throw InvariantViolation("odd k with A_k > 0 in a binary family");
        const BigInt offset = ipow(2, n - 1 - static_cast<std::uint64_t>(k) / 2);
        out.rows.push_back({half - offset, a});
        out.rows.push_back({half + offset, a});
    }
    const BigInt middle = ipow(2, n + 1) * g.evaluate(1) - 2 * g.evaluate(2);
    if (middle < 0) throw InvariantViolation("negative middle-weight multiplicity");
    if (middle != 0) out.rows.push_back({half, middle});
    std::sort(out.rows.begin(), out.rows.end(), [](const WeightRow& a, const WeightRow& b) { return a.weight < b.weight; });
    return out;
}

CodeParams code_params(Family code, std::uint64_t n) {
    const FamilyId fam = code_family(code, n);
    if (code != Family::C1 || n % 2 == 0)
        throw UsageError("closed-form code parameters are available for C1 with odd n only");
    const auto sr = sr_factorize(n, PrimeModulus(2));
    const auto degs = sr.degrees();
    const BigInt half = ipow(2, n - 1);
    BigInt d = half;  // no quadratic part: only affine words
    if (!degs.empty()) {
        const unsigned r = *std::min_element(degs.begin(), degs.end());
        d = half - ipow(2, n - 1 - r / 2);
    }
    return {ipow(2, n), (3 * n + 1) / 2, d};
}

CodeParams code_params_from_enumerator(const WeightEnumerator& we) {
    const BigInt total = we.total();
    std::uint64_t dim = 0;
    while (ipow(2, dim) < total) ++dim;
    if (ipow(2, dim) != total) throw InvariantViolation("code size is not a power of two");
    BigInt dmin = 0;
    for (const auto& r : we.rows)
        if (r.weight > 0) {
            dmin = r.weight;
            break;
        }
    return {ipow(2, we.n), dim, dmin};
}

}  // namespace plateau
