#include "plateau/census.hpp"

#include "plateau/errors.hpp"

#include <algorithm>
#include <cctype>

namespace plateau {

std::string family_name(Family f) {
    switch (f) {
        case Family::C1: return "C1";
        case Family::C2: return "C2";
        case Family::D: return "D";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    std::string u(s);
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    if (u == "C1") return Family::C1;
    if (u == "C2") return Family::C2;
    if (u == "D") return Family::D;
    throw UsageError("unknown family '" + s + "' (expected C1, C2 or D)");
}

void FamilyId::validate() const {
    if (n == 0) throw UsageError("n must be positive");
    if (!is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
    switch (tag) {
        case Family::C1:
            if (p != 2) throw UsageError("family C1 is defined for p = 2 only");
            break;
        case Family::C2:
            if (p != 2) throw UsageError("family C2 is defined for p = 2 only");
            if (n % 2 != 0) throw UsageError("family C2 needs even n, got n = " + std::to_string(n));
            break;
        case Family::D:
            if (p == 2) throw UsageError("family D needs an odd prime p (use C1/C2 for p = 2)");
            break;
    }
}

std::size_t FamilyId::tuple_length() const {
    switch (tag) {
        case Family::C1: return static_cast<std::size_t>((n - 1) / 2);
        case Family::C2: return static_cast<std::size_t>(n / 2);
        case Family::D: return static_cast<std::size_t>(n / 2 + 1);
    }
    return 0;
}

BigInt FamilyId::size() const { return ipow(p, tuple_length()); }

std::string FamilyId::to_string() const {
    return family_name(tag) + "(p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
}

// ---------------------------------------------------------------------------
// Theorem path

namespace {

// 1 + sum_{j=1}^{count} (q^{j d/2} - q^{(j-1) d/2}) z^{j d}
ZPoly sr_factor_poly(std::uint32_t q, unsigned d, std::uint64_t count) {
    std::vector<BigInt> c(count * d + 1);
    c[0] = 1;
    for (std::uint64_t j = 1; j <= count; ++j) c[j * d] = ipow(q, j * d / 2) - ipow(q, (j - 1) * d / 2);
    return ZPoly(std::move(c));
}

// 1 + sum_{j=1}^{count} 2^{j-1} z^{2j}
ZPoly binary_linear_factor(std::uint64_t count) {
    std::vector<BigInt> c(2 * count + 1);
    c[0] = 1;
    for (std::uint64_t j = 1; j <= count; ++j) c[2 * j] = ipow(2, j - 1);
    return ZPoly(std::move(c));
}

// 1 + sum_{j=1}^{(p^v+1)/2} p^{j-1} (p-1) z^{2j-1}
ZPoly odd_linear_factor(std::uint32_t p, std::uint64_t pv) {
    const std::uint64_t count = (pv + 1) / 2;
    std::vector<BigInt> c(2 * count);
    c[0] = 1;
    for (std::uint64_t j = 1; j <= count; ++j) c[2 * j - 1] = ipow(p, j - 1) * (p - 1);
    return ZPoly(std::move(c));
}

}  // namespace

ZPoly gen_poly(const FamilyId& family) {
    family.validate();
    return gen_poly(family, sr_factorize(family.n, PrimeModulus(family.p)));
}

ZPoly gen_poly(const FamilyId& family, const SrFactorization& sr) {
    family.validate();
    if (sr.n != family.n || sr.p.value() != family.p) throw UsageError("factorization does not match the family");
    const std::uint64_t pv = sr.multiplicity;

    if (family.tag == Family::C1 && sr.v == 0) {
        ZPoly g = ZPoly::constant(1);
        for (unsigned d : sr.degrees()) {
            std::vector<BigInt> c(d + 1);
            c[0] = 1;
            c[d] = ipow(2, d / 2) - 1;
            g = g * ZPoly(std::move(c));
        }
        return g;
    }

    ZPoly product = ZPoly::constant(1);
    for (unsigned d : sr.degrees()) product = product * sr_factor_poly(family.p, d, pv);

    switch (family.tag) {
        case Family::C1: return binary_linear_factor(pv / 2 - 1) * product;
        case Family::C2: return binary_linear_factor(pv / 2) * product;
        case Family::D: {
            const ZPoly first = odd_linear_factor(family.p, pv);
            return family.n % 2 == 1 ? first * product : first * first * product;
        }
    }
    return ZPoly();
}

// ---------------------------------------------------------------------------
// Proposition path

namespace {

class NLookup {
  public:
    explicit NLookup(const SrExponentVector& f) : table_(N_table(f)) {}
    BigInt operator()(long t) const {
        if (t == 0) return 1;
        if (t < 0 || t % 2 != 0 || t >= static_cast<long>(table_.size())) return 0;
        return table_[static_cast<std::size_t>(t)];
    }

  private:
    std::vector<BigInt> table_;
};

}  // namespace

ZPoly gen_poly_via_propositions(const FamilyId& family) {
    family.validate();
    return gen_poly_via_propositions(family, sr_factorize(family.n, PrimeModulus(family.p)));
}

ZPoly gen_poly_via_propositions(const FamilyId& family, const SrFactorization& sr) {
    family.validate();
    if (sr.n != family.n || sr.p.value() != family.p) throw UsageError("factorization does not match the family");
    const auto ctx = SrContext::from(sr);
    const auto pv = static_cast<unsigned>(sr.multiplicity);
    const long n = static_cast<long>(family.n);

    SrExponentVector core = SrExponentVector::one(ctx);  // prod r_i^{p^v}
    for (auto& e : core.e) e = pv;

    std::vector<BigInt> coeffs(family.n + 1);
    auto set_s = [&](long s, const BigInt& value) { coeffs[static_cast<std::size_t>(n - s)] = value; };

    if (family.tag != Family::D) {
        // C1: (x^n+1)/(x+1)^2 for even n, (x^n+1)/(x+1) for odd n. C2: x^n+1.
        SrExponentVector f = core;
        if (family.tag == Family::C2) f.e_minus = pv / 2;
        else f.e_minus = pv >= 2 ? (pv - 2) / 2 : 0;
        const NLookup N(f);
        for (long s = 0; s <= n; ++s) set_s(s, N(n - s));
        return ZPoly(std::move(coeffs));
    }

    SrExponentVector minus = core;  // (x-1)^{p^v+1} prod r_i^{p^v}
    minus.e_minus = (pv + 1) / 2;
    const NLookup N_core(core), N_minus(minus);

    if (n % 2 == 1) {
        for (long s = 0; s <= n; ++s) {
            if (s % 2 == 1) set_s(s, N_core(n - s));
            else set_s(s, N_minus(n - s + 1) - N_core(n - s + 1));
        }
        return ZPoly(std::move(coeffs));
    }

    SrExponentVector plus = core;  // (x+1)^{p^v+1} prod r_i^{p^v}
    plus.e_plus = (pv + 1) / 2;
    SrExponentVector both = minus;
    both.e_plus = (pv + 1) / 2;
    const NLookup N_plus(plus), N_both(both);
    for (long s = 0; s <= n; ++s) {
        if (s % 2 == 1) {
            set_s(s, N_plus(n - s + 1) + N_minus(n - s + 1) - 2 * N_core(n - s + 1));
        } else {
            set_s(s, N_core(n - s) + N_both(n - s + 2) - N_plus(n - s + 2) - N_minus(n - s + 2) +
                         N_core(n - s + 2));
        }
    }
    return ZPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Distributions

PlateauDistribution PlateauDistribution::from_gen_poly(const FamilyId& family, const ZPoly& g) {
    if (g.degree() > static_cast<std::ptrdiff_t>(family.n))
        throw InvariantViolation("generating polynomial degree exceeds n");
    PlateauDistribution d{family, {}};
    for (std::ptrdiff_t t = 0; t <= g.degree(); ++t) {
        const BigInt c = g.coeff(t);
        if (c != 0) d.counts[static_cast<unsigned>(family.n - static_cast<std::uint64_t>(t))] = c;
    }
    return d;
}

BigInt PlateauDistribution::total() const {
    BigInt sum = 0;
    for (const auto& [s, c] : counts) sum += c;
    return sum;
}

BigInt PlateauDistribution::at(unsigned s) const {
    auto it = counts.find(s);
    return it == counts.end() ? BigInt(0) : it->second;
}

std::optional<std::string> PlateauDistribution::check_invariants(unsigned v) const {
    if (total() != family.size())
        return "total " + to_decimal(total()) + " != family size " + to_decimal(family.size());
    if (at(static_cast<unsigned>(family.n)) != 1) return "count of s = n is not 1";
    const std::uint64_t pv = ipow(family.p, v).convert_to<std::uint64_t>();
    for (const auto& [s, c] : counts) {
        if (c < 0) return "negative count at s = " + std::to_string(s);
        if (family.p == 2 && (s % 2) != (family.n % 2)) return "parity violated at s = " + std::to_string(s);
        if (family.p != 2 && s % 2 == 1 && s < pv)
            return "odd s = " + std::to_string(s) + " below p^v = " + std::to_string(pv);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bent / semi-bent

namespace {

PrintedCorollary printed(std::string quantity, BigRational value, const BigInt& actual, unsigned v) {
    const bool ok = value == BigRational(actual);
    std::string label = ok ? "printed-corollary" : "printed-corollary (inconsistent at v=" + std::to_string(v) + ")";
    return {std::move(quantity), std::move(value), ok, std::move(label)};
}

}  // namespace

SpecialCounts special_counts(const FamilyId& family) {
    family.validate();
    const auto sr = sr_factorize(family.n, PrimeModulus(family.p));
    const ZPoly g = gen_poly(family, sr);
    const auto n = static_cast<std::ptrdiff_t>(family.n);

    SpecialCounts out;
    out.bent = g.coeff(n);
    out.semibent_s = (family.p != 2 || family.n % 2 == 1) ? 1 : 2;
    out.semibent = g.coeff(n - out.semibent_s);
    if (family.tag == Family::C1 && out.bent != 0)
        throw InvariantViolation("C1 produced a bent function");

    const std::uint64_t pv = sr.multiplicity;
    if (family.p == 2 && sr.v >= 1) {
        // prod (2^{2^v deg/2} - 2^{(2^v - 1) deg/2}), with and without x^2+x+1
        BigInt lead = 1, lead_without_trinomial = 1;
        bool has_trinomial = false;
        const FpPoly trinomial(sr.p, {1, 1, 1});
        for (const auto& r : sr.sr_primes) {
            const BigInt term = ipow(2, pv * r.degree / 2) - ipow(2, (pv - 1) * r.degree / 2);
            lead *= term;
            if (r.poly == trinomial) has_trinomial = true;
            else lead_without_trinomial *= term;
        }
        const std::uint64_t half = pv / 2;  // 2^{v-1}
        if (family.tag == Family::C2) {
            out.printed.push_back(printed("bent", BigRational(ipow(2, half) * lead), out.bent, sr.v));
            // semi-bent in C2: N_n(2) + [3 | n] 2^{2^{v-1}-1} 2^{2^v-2} prod_{r != x^2+x+1}
            const BigInt n2 = gen_poly(FamilyId{Family::C1, 2, family.n}, sr).coeff(n - 2);
            BigInt m2 = n2;
            if (has_trinomial) m2 += ipow(2, half - 1) * ipow(2, pv - 2) * lead_without_trinomial;
            out.printed.push_back(printed("semibent", BigRational(m2), out.semibent, sr.v));
        } else {
            // 2^{2^{v-1}-2} may be 1/2 at v = 1
            const BigRational prefactor =
                half >= 2 ? BigRational(ipow(2, half - 2)) : BigRational(1, 2);
            out.printed.push_back(printed("semibent", prefactor * BigRational(lead), out.semibent, sr.v));
        }
    } else if (family.tag == Family::D) {
        BigInt lead = 1;
        for (unsigned d : sr.degrees()) lead *= ipow(family.p, pv * d / 2) - ipow(family.p, (pv - 1) * d / 2);
        BigInt first = BigInt(family.p - 1) * ipow(family.p, (pv - 1) / 2);
        if (family.n % 2 == 0) first *= first;
        out.printed.push_back(printed("bent", BigRational(first * lead), out.bent, sr.v));
    }
    return out;
}

}  // namespace plateau
