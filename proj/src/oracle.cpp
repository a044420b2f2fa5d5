#include "plateau/oracle.hpp"

#include "plateau/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace plateau {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

}  // namespace

QuadraticFunction family_member(const FamilyId& family, std::uint64_t index) {
    family.validate();
    QuadraticFunction q{family, std::vector<Residue>(family.tuple_length(), 0)};
    for (auto& a : q.coeffs) {
        a = static_cast<Residue>(index % family.p);
        index /= family.p;
    }
    if (index != 0) throw UsageError("member index out of range for " + family.to_string());
    return q;
}

FpPoly associate_poly(const QuadraticFunction& q) {
    const FamilyId& f = q.family;
    f.validate();
    if (q.coeffs.size() != f.tuple_length())
        throw UsageError("expected " + std::to_string(f.tuple_length()) + " coefficients for " + f.to_string() +
                         ", got " + std::to_string(q.coeffs.size()));
    const std::size_t n = f.n;
    std::vector<std::int64_t> c(n + 1, 0);
    auto sym = [&](std::size_t i, Residue a) {
        c[i] += a;
        c[n - i] += a;
    };
    switch (f.tag) {
        case Family::C1:
            for (std::size_t i = 1; i <= q.coeffs.size(); ++i) sym(i, q.coeffs[i - 1]);
            break;
        case Family::C2:
            for (std::size_t i = 1; i < n / 2; ++i) sym(i, q.coeffs[i - 1]);
            c[n / 2] += q.coeffs.back();
            break;
        case Family::D:
            for (std::size_t i = 0; i < q.coeffs.size(); ++i) sym(i, q.coeffs[i]);
            break;
    }
    return FpPoly(PrimeModulus(f.p), std::span<const std::int64_t>(c));
}

namespace {

unsigned plateau_s_with(const QuadraticFunction& q, const FpPoly& cyc) {
    const FpPoly a = associate_poly(q);
    if (a.is_zero()) return static_cast<unsigned>(q.family.n);
    return static_cast<unsigned>(poly_gcd(cyc, a).degree());
}

}  // namespace

unsigned plateau_s(const QuadraticFunction& q) {
    return plateau_s_with(q, FpPoly::cyclic(PrimeModulus(q.family.p), q.family.n));
}

std::uint64_t enumeration_budget_from_env() {
    const char* env = std::getenv("PLATEAU_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError(std::string("PLATEAU_BUDGET must be a positive integer, got '") + env + "'");
    return v;
}

PlateauDistribution enumerate_distribution(const FamilyId& family, const EnumerationOptions& opts) {
    family.validate();
    const std::uint64_t total = checked_pow(family.p, family.tuple_length(), opts.budget);
    if (total > opts.budget)
        throw BudgetExceeded("enumerating " + family.to_string() + " requires " + to_decimal(family.size()) +
                             " evaluations, budget is " + std::to_string(opts.budget) +
                             " (raise with --budget or PLATEAU_BUDGET)");

    unsigned workers = opts.workers != 0 ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    const std::size_t bins = family.n + 1;
    std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(bins, 0));

    auto run = [&](unsigned w) {
        const FpPoly cyc = FpPoly::cyclic(PrimeModulus(family.p), family.n);
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        for (std::uint64_t i = lo; i < hi; ++i) ++hist[w][plateau_s_with(family_member(family, i), cyc)];
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    PlateauDistribution out{family, {}};
    for (std::size_t s = 0; s < bins; ++s) {
        BigInt c = 0;
        for (const auto& h : hist) c += h[s];
        if (c != 0) out.counts[static_cast<unsigned>(s)] = c;
    }
    return out;
}

// ---- Z[zeta_p] ----

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), c_(p - 1, BigInt(0)) {
    if (p < 3 || !is_prime(p)) throw UsageError("cyclotomic integers need an odd prime");
}

CyclotomicInt CyclotomicInt::reduce(std::uint32_t p, std::vector<BigInt> full) {
    // fold exponents mod p, then zeta^{p-1} = -(1 + ... + zeta^{p-2})
    std::vector<BigInt> folded(p, BigInt(0));
    for (std::size_t i = 0; i < full.size(); ++i) folded[i % p] += full[i];
    CyclotomicInt r(p);
    for (std::uint32_t i = 0; i + 1 < p; ++i) r.c_[i] = folded[i] - folded[p - 1];
    return r;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
    if (counts.size() != p) throw UsageError("need one count per exponent 0 .. p-1");
    std::vector<BigInt> full(counts.begin(), counts.end());
    return reduce(p, std::move(full));
}

bool CyclotomicInt::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const BigInt& x) { return x == 0; });
}

BigInt CyclotomicInt::rational_value() const {
    if (!is_rational()) throw InvariantViolation("cyclotomic integer is not rational");
    return c_[0];
}

bool CyclotomicInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x == 0; });
}

CyclotomicInt CyclotomicInt::conj() const {
    std::vector<BigInt> full(p_, BigInt(0));
    for (std::uint32_t i = 0; i + 1 < p_; ++i) full[(p_ - i) % p_] += c_[i];
    return reduce(p_, std::move(full));
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.p_ != b.p_) throw UsageError("cyclotomic integers of different p");
    CyclotomicInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.p_ != b.p_) throw UsageError("cyclotomic integers of different p");
    std::vector<BigInt> full(a.p_, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) full[(i + j) % a.p_] += a.c_[i] * b.c_[j];
    }
    return CyclotomicInt::reduce(a.p_, std::move(full));
}

// ---- F_{p^n} tables ----

FieldTables::FieldTables(PrimeModulus p, unsigned n) : p_(p), n_(n), q_(0), field_(p, n) {
    if (n == 0) throw UsageError("field degree must be positive");
    constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;
    q_ = checked_pow(p.value(), n, kMaxOrder);
    if (q_ > kMaxOrder) throw BudgetExceeded("field tables for F_" + std::to_string(p.value()) + "^" + std::to_string(n) + " are too large");

    pow_p_.resize(n + 1);
    pow_p_[0] = 1;
    for (unsigned k = 1; k <= n; ++k) pow_p_[k] = pow_p_[k - 1] * p.value();

    // primitive element
    const std::uint64_t order = q_ - 1;
    const auto primes = prime_divisors(order);
    ExtElement g = field_.one();
    for (std::uint64_t cand = 1; cand < q_; ++cand) {
        const ExtElement e = field_.from_index(cand);
        bool primitive = true;
        for (auto r : primes)
            if (e.pow(BigInt(order / r)).is_one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            g = e;
            break;
        }
    }
    exp_.assign(order, 0);
    log_.assign(q_, 0);
    ExtElement cur = field_.one();
    for (std::uint64_t k = 0; k < order; ++k) {
        const std::uint64_t idx = cur.index();
        if (k > 0 && idx == 1) throw InvariantViolation("generator search returned a non-primitive element");
        exp_[k] = idx;
        log_[idx] = k;
        cur = cur * g;
    }

    frob_.assign(q_, 0);
    for (std::uint64_t a = 1; a < q_; ++a) frob_[a] = exp_[(log_[a] * p.value()) % order];

    std::vector<Residue> tau(n);
    for (unsigned k = 0; k < n; ++k) tau[k] = ext_trace(field_.from_index(pow_p_[k]), n, 1).as_residue();
    trace_.assign(q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a) {
        std::uint64_t t = 0;
        for (unsigned k = 0; k < n; ++k) t += std::uint64_t{digit(a, k)} * tau[k];
        trace_[a] = static_cast<Residue>(t % p.value());
    }
}

Residue FieldTables::digit(std::uint64_t a, unsigned k) const {
    return static_cast<Residue>((a / pow_p_[k]) % p_.value());
}

std::uint64_t FieldTables::add(std::uint64_t a, std::uint64_t b) const {
    if (p_.value() == 2) return a ^ b;
    std::uint64_t r = 0;
    for (unsigned k = 0; k < n_; ++k) r += pow_p_[k] * p_.add(digit(a, k), digit(b, k));
    return r;
}

std::uint64_t FieldTables::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint64_t FieldTables::frobenius(std::uint64_t a, unsigned k) const {
    for (unsigned i = 0; i < k % n_; ++i) a = frob_[a];
    return a;
}

Residue FieldTables::subfield_trace(std::uint64_t a, unsigned from_degree) const {
    if (from_degree == 0 || n_ % from_degree != 0) throw UsageError("subfield degree must divide the field degree");
    if (frobenius(a, from_degree) != a) throw UsageError("element is not in the requested subfield");
    std::uint64_t acc = 0;
    std::uint64_t y = a;
    for (unsigned j = 0; j < from_degree; ++j) {
        acc = add(acc, y);
        y = frob_[y];
    }
    if (acc >= p_.value()) throw InvariantViolation("subfield trace left the prime field");
    return static_cast<Residue>(acc);
}

// ---- Walsh spectra ----

QuadraticEvaluator::QuadraticEvaluator(const FamilyId& family, const WalshLimits& limits)
    : family_((family.validate(), family)),
      tables_([&] {
          if (family.p == 2) {
              if (family.n > limits.binary_max_n)
                  throw BudgetExceeded("Walsh spectra for p = 2 are limited to n <= " + std::to_string(limits.binary_max_n));
          } else {
              const std::uint64_t q = checked_pow(family.p, family.n, limits.odd_pair_budget);
              if (q > limits.odd_pair_budget || q * q > limits.odd_pair_budget)
                  throw BudgetExceeded("Walsh spectra for " + family.to_string() + " need p^n * p^n <= " +
                                       std::to_string(limits.odd_pair_budget));
          }
          return FieldTables(PrimeModulus(family.p), static_cast<unsigned>(family.n));
      }()) {
    const std::uint64_t q = tables_.size();
    const unsigned n = static_cast<unsigned>(family_.n);
    const std::size_t len = family_.tuple_length();

    // exponent index i for coefficient slot c
    auto slot_exponent = [&](std::size_t c) -> unsigned {
        return family_.tag == Family::D ? static_cast<unsigned>(c) : static_cast<unsigned>(c + 1);
    };
    terms_.assign(len, std::vector<Residue>(q, 0));
    for (std::size_t c = 0; c < len; ++c) {
        const unsigned i = slot_exponent(c);
        const bool middle = family_.tag == Family::C2 && i == n / 2;
        for (std::uint64_t x = 0; x < q; ++x) {
            const std::uint64_t w = tables_.mul(tables_.frobenius(x, i), x);
            terms_[c][x] = middle ? tables_.subfield_trace(w, n / 2) : tables_.trace(w);
        }
    }

    functional_.assign(q, 0);
    for (std::uint64_t b = 0; b < q; ++b) {
        std::uint64_t u = 0;
        for (unsigned k = 0; k < n; ++k) u += tables_.basis(k) * tables_.trace(tables_.mul(b, tables_.basis(k)));
        functional_[b] = u;
    }
}

std::vector<Residue> QuadraticEvaluator::truth_table(std::span<const Residue> coeffs) const {
    if (coeffs.size() != terms_.size()) throw UsageError("coefficient tuple length mismatch for " + family_.to_string());
    const std::uint64_t q = tables_.size();
    const std::uint32_t p = family_.p;
    std::vector<Residue> out(q, 0);
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
        if (coeffs[c] % p == 0) continue;
        for (std::uint64_t x = 0; x < q; ++x) out[x] = static_cast<Residue>((out[x] + std::uint64_t{coeffs[c]} * terms_[c][x]) % p);
    }
    return out;
}

std::vector<Residue> QuadraticEvaluator::trace_functional(std::uint64_t b) const {
    const std::uint64_t q = tables_.size();
    std::vector<Residue> out(q);
    for (std::uint64_t x = 0; x < q; ++x) out[x] = tables_.trace(tables_.mul(b, x));
    return out;
}

WalshReport QuadraticEvaluator::walsh(std::span<const Residue> coeffs) const {
    const auto values = truth_table(coeffs);
    return family_.p == 2 ? walsh_binary(values) : walsh_odd(values);
}

WalshReport QuadraticEvaluator::walsh_binary(const std::vector<Residue>& values) const {
    const std::uint64_t q = tables_.size();
    const unsigned n = static_cast<unsigned>(family_.n);
    std::vector<std::int64_t> w(q);
    for (std::uint64_t x = 0; x < q; ++x) w[x] = values[x] ? -1 : 1;
    for (std::uint64_t h = 1; h < q; h <<= 1)
        for (std::uint64_t i = 0; i < q; i += h << 1)
            for (std::uint64_t j = i; j < i + h; ++j) {
                const std::int64_t a = w[j], b = w[j + h];
                w[j] = a + b;
                w[j + h] = a - b;
            }

    std::uint64_t max_sq = 0, support = 0, sum_sq = 0;
    std::vector<std::uint64_t> sq(q);
    for (std::uint64_t b = 0; b < q; ++b) {
        const std::int64_t v = w[functional_[b]];
        sq[b] = static_cast<std::uint64_t>(v * v);
        max_sq = std::max(max_sq, sq[b]);
        sum_sq += sq[b];
        if (sq[b] != 0) ++support;
    }
    WalshReport r{0, support, true, sum_sq == q * q};
    unsigned lg = 0;
    while ((std::uint64_t{1} << lg) < max_sq) ++lg;
    if ((std::uint64_t{1} << lg) != max_sq || lg < n) r.magnitudes_ok = false;
    r.s_from_spectrum = lg >= n ? lg - n : 0;
    for (auto v : sq)
        if (v != 0 && v != max_sq) r.magnitudes_ok = false;
    return r;
}

WalshReport QuadraticEvaluator::walsh_odd(const std::vector<Residue>& values) const {
    const std::uint64_t q = tables_.size();
    const std::uint32_t p = family_.p;
    const unsigned n = static_cast<unsigned>(family_.n);

    std::vector<BigInt> sq(q);
    std::vector<std::uint32_t> lin(q);
    std::vector<std::int64_t> counts(p);
    for (std::uint64_t b = 0; b < q; ++b) {
        // lin[x] = sum_k u_k x_k, built digit by digit
        const std::uint64_t u = functional_[b];
        lin[0] = 0;
        for (unsigned k = 0; k < n; ++k) {
            const std::uint64_t block = tables_.basis(k);
            const Residue uk = tables_.digit(u, k);
            for (std::uint32_t d = 1; d < p; ++d)
                for (std::uint64_t x = 0; x < block; ++x) lin[d * block + x] = (lin[x] + d * uk) % p;
        }
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint64_t x = 0; x < q; ++x) ++counts[(values[x] + p - lin[x]) % p];
        const auto w = CyclotomicInt::from_exponent_counts(p, counts);
        sq[b] = (w * w.conj()).rational_value();
    }

    BigInt max_sq = 0, sum_sq = 0;
    std::uint64_t support = 0;
    for (const auto& v : sq) {
        if (v > max_sq) max_sq = v;
        sum_sq += v;
        if (v != 0) ++support;
    }
    WalshReport r{0, support, true, sum_sq == ipow(BigInt(q), 2)};
    unsigned lg = 0;
    while (ipow(BigInt(p), lg) < max_sq) ++lg;
    if (ipow(BigInt(p), lg) != max_sq || lg < n) r.magnitudes_ok = false;
    r.s_from_spectrum = lg >= n ? lg - n : 0;
    for (const auto& v : sq)
        if (v != 0 && v != max_sq) r.magnitudes_ok = false;
    return r;
}

std::map<std::uint64_t, std::uint64_t> QuadraticEvaluator::coset_weights(std::span<const Residue> coeffs) const {
    if (family_.p != 2) throw UsageError("codeword weights are defined for p = 2 only");
    const auto values = truth_table(coeffs);
    const std::uint64_t q = tables_.size();
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t b = 0; b < q; ++b) {
        std::uint64_t wt = 0;
        for (std::uint64_t x = 0; x < q; ++x) wt += values[x] ^ tables_.trace(tables_.mul(b, x));
        ++hist[wt];
        ++hist[q - wt];  // complement: constant term c = 1
    }
    return hist;
}

WalshReport walsh_spectrum(const QuadraticFunction& q, const WalshLimits& limits) {
    return QuadraticEvaluator(q.family, limits).walsh(q.coeffs);
}

}  // namespace plateau
