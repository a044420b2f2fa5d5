#include "plateau/factorization.hpp"

#include "plateau/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace plateau {

std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t m, const PrimeModulus& p) {
    if (m == 0 || std::gcd(m, std::uint64_t{p.value()}) != 1)
        throw UsageError("cyclotomic cosets need gcd(m, p) = 1, got m=" + std::to_string(m) +
                         " p=" + std::to_string(p.value()));
    std::vector<bool> seen(m, false);
    std::vector<CyclotomicCoset> out;
    for (std::uint64_t j = 0; j < m; ++j) {
        if (seen[j]) continue;
        CyclotomicCoset c{j, {}};
        std::uint64_t i = j;
        do {
            seen[i] = true;
            c.members.push_back(i);
            i = (i * p.value()) % m;
        } while (i != j);
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t m) {
    if (m == 1) return 1;
    if (std::gcd(p, m) != 1) throw UsageError("order undefined for gcd(p, m) != 1");
    std::uint64_t k = 1;
    for (std::uint64_t x = p % m; x != 1; x = (x * p) % m) ++k;
    return k;
}

namespace {

// Element of order exactly m in F_{p^d}^*, where m | p^d - 1.
ExtElement root_of_unity(const ExtField& field, std::uint64_t m) {
    if (m == 1) return field.one();
    const BigInt cofactor = (field.order() - 1) / m;
    const auto qs = prime_divisors(m);
    const std::uint64_t size = static_cast<std::uint64_t>(field.order());
    for (std::uint64_t idx = 1; idx < size; ++idx) {
        const ExtElement beta = field.from_index(idx).pow(cofactor);
        const bool exact = std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) {
            return !beta.pow(BigInt(m / q)).is_one();
        });
        if (exact) return beta;
    }
    throw InvariantViolation("no element of order " + std::to_string(m) + " found");
}

FpPoly power(const FpPoly& f, std::uint64_t e) {
    FpPoly r = FpPoly::constant(f.modulus(), 1);
    for (std::uint64_t i = 0; i < e; ++i) r *= f;
    return r;
}

}  // namespace

std::vector<CyclicFactor> factor_cyclic(std::uint64_t n, const PrimeModulus& p) {
    if (n == 0) throw UsageError("x^n - 1 needs n >= 1");
    std::uint64_t m = n, mult = 1;
    while (m % p.value() == 0) {
        m /= p.value();
        mult *= p.value();
    }
    const auto cosets = cyclotomic_cosets(m, p);
    const ExtField field(p, static_cast<unsigned>(multiplicative_order(p.value(), m)));
    const ExtElement alpha = root_of_unity(field, m);

    std::vector<ExtElement> powers;
    powers.reserve(m);
    powers.push_back(field.one());
    for (std::uint64_t i = 1; i < m; ++i) powers.push_back(powers.back() * alpha);

    std::vector<CyclicFactor> out;
    for (const auto& coset : cosets) {
        // prod (x - alpha^i), coefficients low degree first
        std::vector<ExtElement> acc{field.one()};
        for (std::uint64_t i : coset.members) {
            std::vector<ExtElement> next(acc.size() + 1, field.zero());
            for (std::size_t k = 0; k < acc.size(); ++k) {
                next[k + 1] = next[k + 1] + acc[k];
                next[k] = next[k] - acc[k] * powers[i];
            }
            acc = std::move(next);
        }
        std::vector<Residue> coeffs;
        coeffs.reserve(acc.size());
        for (const auto& c : acc) {
            if (!c.in_base_field())
                throw InvariantViolation("factor for coset " + std::to_string(coset.representative) +
                                         " has a coefficient outside F_p");
            coeffs.push_back(c.as_residue());
        }
        out.push_back({FpPoly(p, std::move(coeffs)), mult, coset.representative});
    }

    FpPoly product = FpPoly::constant(p, 1);
    for (const auto& f : out) product *= power(f.poly, f.multiplicity);
    if (product != FpPoly::cyclic(p, n))
        throw InvariantViolation("factors do not multiply back to x^" + std::to_string(n) + " - 1");
    return out;
}

std::vector<unsigned> SrFactorization::degrees() const {
    std::vector<unsigned> d;
    d.reserve(sr_primes.size());
    for (const auto& r : sr_primes) d.push_back(r.degree);
    return d;
}

FpPoly SrFactorization::product() const {
    FpPoly base = FpPoly(p, {-1, 1});
    if (has_x_plus_1) base *= FpPoly(p, {1, 1});
    for (const auto& r : sr_primes) base *= r.poly;
    return power(base, multiplicity);
}

SrFactorization group_self_reciprocal(std::span<const CyclicFactor> factors) {
    if (factors.empty()) throw UsageError("empty factor list");
    const PrimeModulus p = factors.front().poly.modulus();
    const std::uint64_t mult = factors.front().multiplicity;
    std::uint64_t n = 0;
    for (const auto& f : factors) {
        if (f.multiplicity != mult) throw UsageError("factors with mixed multiplicities");
        n += f.poly.degree() * f.multiplicity;
    }

    SrFactorization out{p, n, 0, n / mult, false, {}, mult};
    for (std::uint64_t q = mult; q > 1; q /= p.value()) ++out.v;

    const FpPoly x_minus_1(p, {-1, 1});
    const FpPoly x_plus_1(p, {1, 1});
    std::vector<bool> used(factors.size(), false);
    bool seen_minus = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (used[i]) continue;
        const FpPoly& f = factors[i].poly;
        if (f == x_minus_1) {
            seen_minus = true;
            used[i] = true;
            continue;
        }
        if (f == x_plus_1) {
            out.has_x_plus_1 = true;
            used[i] = true;
            continue;
        }
        const FpPoly rec = poly_reciprocal(f).monic();
        if (rec == f) {
            used[i] = true;
            out.sr_primes.push_back({f, static_cast<unsigned>(f.degree()), true});
            continue;
        }
        std::size_t j = i + 1;
        while (j < factors.size() && (used[j] || factors[j].poly != rec)) ++j;
        if (j == factors.size())
            throw InvariantViolation("reciprocal partner missing for " + f.to_string());
        used[i] = used[j] = true;
        FpPoly r = f * rec;
        const auto deg = static_cast<unsigned>(r.degree());
        out.sr_primes.push_back({std::move(r), deg, false});
    }
    if (!seen_minus) throw InvariantViolation("x - 1 missing from the factorization");

    std::sort(out.sr_primes.begin(), out.sr_primes.end(), [](const SrPrime& a, const SrPrime& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return lex_compare(a.poly, b.poly) < 0;
    });

    std::uint64_t total = mult + (out.has_x_plus_1 ? mult : 0);
    for (const auto& r : out.sr_primes) {
        if (r.degree % 2 != 0 || r.poly != poly_reciprocal(r.poly))
            throw InvariantViolation("not an even-degree palindromic factor: " + r.poly.to_string());
        total += mult * r.degree;
    }
    if (total != n) throw InvariantViolation("degree bookkeeping does not add up to n");
    if (out.product() != FpPoly::cyclic(p, n))
        throw InvariantViolation("grouped factors do not multiply back to x^n - 1");
    return out;
}

}  // namespace plateau
