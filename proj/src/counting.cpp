#include "plateau/counting.hpp"

#include "plateau/errors.hpp"

#include <sstream>

namespace plateau {

// ---------------------------------------------------------------------------
// ZPoly

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const BigInt& c) { return ZPoly(std::vector<BigInt>{c}); }

ZPoly ZPoly::monomial(std::size_t degree, const BigInt& c) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return ZPoly(std::move(v));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt ZPoly::coeff(std::ptrdiff_t t) const {
    if (t < 0 || t >= static_cast<std::ptrdiff_t>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(t)];
}

BigInt ZPoly::evaluate(const BigInt& z) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ZPoly ZPoly::scale_argument(const BigInt& k) const {
    std::vector<BigInt> v(c_);
    BigInt w = 1;
    for (auto& c : v) {
        c *= w;
        w *= k;
    }
    return ZPoly(std::move(v));
}

ZPoly ZPoly::shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (c_[i] != 0) throw InvariantViolation("shift_down would drop a nonzero coefficient");
    if (k >= c_.size()) return ZPoly();
    return ZPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

bool ZPoly::all_nonnegative() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(v));
}

ZPoly operator*(const BigInt& k, const ZPoly& a) {
    std::vector<BigInt> v(a.c_);
    for (auto& c : v) c *= k;
    return ZPoly(std::move(v));
}

std::string ZPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] < 0 ? " - " : " + ");
        else if (c_[i] < 0) os << "-";
        first = false;
        const BigInt mag = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << 'z';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exponent vectors

std::shared_ptr<const SrContext> SrContext::from(const SrFactorization& f) {
    return make(f.p.value(), f.p.value() != 2, f.degrees());
}

std::shared_ptr<const SrContext> SrContext::make(std::uint32_t p, bool distinct_plus,
                                                  std::vector<unsigned> sr_degrees) {
    for (unsigned d : sr_degrees)
        if (d == 0 || d % 2 != 0) throw UsageError("prime self-reciprocal degrees must be even and positive");
    if (p == 2 && distinct_plus) throw UsageError("for p = 2, (x+1)^2 coincides with (x-1)^2");
    return std::make_shared<const SrContext>(SrContext{p, distinct_plus, std::move(sr_degrees)});
}

SrExponentVector SrExponentVector::one(std::shared_ptr<const SrContext> ctx) {
    SrExponentVector f;
    f.e.assign(ctx->sr_degrees.size(), 0);
    f.ctx = std::move(ctx);
    return f;
}

std::vector<SrExponentVector::Part> SrExponentVector::parts() const {
    if (!ctx) throw UsageError("exponent vector without context");
    if (e.size() != ctx->sr_degrees.size()) throw UsageError("exponent vector length mismatch");
    if (!ctx->distinct_plus && e_plus != 0) throw UsageError("(x+1)^2 is not a separate prime here");
    std::vector<Part> out;
    out.push_back({PrimeKind::LinearMinus, 2, e_minus});
    if (ctx->distinct_plus) out.push_back({PrimeKind::LinearPlus, 2, e_plus});
    for (std::size_t i = 0; i < e.size(); ++i) out.push_back({PrimeKind::SrPrime, ctx->sr_degrees[i], e[i]});
    return out;
}

std::vector<unsigned> SrExponentVector::exponents() const {
    std::vector<unsigned> out;
    for (const auto& part : parts()) out.push_back(part.exponent);
    return out;
}

SrExponentVector SrExponentVector::from_parts(std::shared_ptr<const SrContext> ctx,
                                              const std::vector<unsigned>& exps) {
    const std::size_t lin = ctx->distinct_plus ? 2 : 1;
    if (exps.size() != lin + ctx->sr_degrees.size()) throw UsageError("exponent list length mismatch");
    SrExponentVector f = one(ctx);
    f.e_minus = exps[0];
    if (ctx->distinct_plus) f.e_plus = exps[1];
    for (std::size_t i = 0; i < f.e.size(); ++i) f.e[i] = exps[lin + i];
    return f;
}

unsigned SrExponentVector::degree() const {
    unsigned d = 0;
    for (const auto& part : parts()) d += part.degree * part.exponent;
    return d;
}

bool SrExponentVector::is_one() const { return degree() == 0; }

void for_each_divisor(const SrExponentVector& f, const std::function<void(const SrExponentVector&)>& fn) {
    const auto bounds = f.exponents();
    std::vector<unsigned> cur(bounds.size(), 0);
    for (;;) {
        fn(SrExponentVector::from_parts(f.ctx, cur));
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == bounds[i]) cur[i++] = 0;
        if (i == cur.size()) return;
        ++cur[i];
    }
}

int mu_p(const SrExponentVector& f) {
    int sign = 1;
    for (const auto& part : f.parts()) {
        if (part.exponent >= 2) return 0;
        if (part.exponent == 1) sign = -sign;
    }
    return sign;
}

BigInt phi_prime_power(PrimeKind kind, unsigned degree, unsigned j, std::uint32_t p) {
    if (j == 0) throw UsageError("phi_prime_power needs an exponent j >= 1");
    if (kind != PrimeKind::SrPrime) {
        if (degree != 2) throw UsageError("(x -/+ 1)^2 has degree 2");
        return ipow(p, j - 1) * (p - 1);
    }
    if (degree == 0 || degree % 2 != 0) throw UsageError("prime self-reciprocal degree must be even");
    return ipow(p, std::uint64_t{j} * degree / 2) - ipow(p, std::uint64_t{j - 1} * degree / 2);
}

BigInt phi_p(const SrExponentVector& f) {
    if (f.is_one()) return 0;
    BigInt r = 1;
    for (const auto& part : f.parts())
        if (part.exponent > 0) r *= phi_prime_power(part.kind, part.degree, part.exponent, f.ctx->p);
    return r;
}

BigInt phi_p_mobius(const SrExponentVector& f) {
    if (f.is_one()) return 0;
    const unsigned deg = f.degree();
    BigInt sum = 0;
    for_each_divisor(f, [&](const SrExponentVector& d) {
        const int mu = mu_p(d);
        if (mu == 0) return;
        const BigInt term = ipow(f.ctx->p, (deg - d.degree()) / 2);
        if (mu > 0) sum += term;
        else sum -= term;
    });
    return sum;
}

std::vector<BigInt> N_table(const SrExponentVector& f) {
    const auto parts = f.parts();
    // phi of each prime power, indexed [part][j]; j = 0 means "absent" (factor 1).
    std::vector<std::vector<BigInt>> pp(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        pp[i].push_back(1);
        for (unsigned j = 1; j <= parts[i].exponent; ++j)
            pp[i].push_back(phi_prime_power(parts[i].kind, parts[i].degree, j, f.ctx->p));
    }
    std::vector<BigInt> table(f.degree() + 1);
    table[0] = 1;
    std::vector<unsigned> cur(parts.size(), 0);
    for (;;) {
        unsigned deg = 0;
        BigInt prod = 1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            deg += parts[i].degree * cur[i];
            if (cur[i] != 0) prod *= pp[i][cur[i]];
        }
        if (deg > 0) table[deg] += prod;
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == parts[i].exponent) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    return table;
}

BigInt N_f_t(const SrExponentVector& f, long t) {
    if (t == 0) return 1;
    if (t < 0 || t % 2 != 0 || t > static_cast<long>(f.degree())) return 0;
    return N_table(f)[static_cast<std::size_t>(t)];
}

ZPoly simple_G(PrimeKind kind, unsigned degree, unsigned k, std::uint32_t p) {
    std::vector<BigInt> v(std::size_t{k} * degree + 1);
    v[0] = 1;
    for (unsigned j = 1; j <= k; ++j) v[std::size_t{j} * degree] = phi_prime_power(kind, degree, j, p);
    return ZPoly(std::move(v));
}

ZPoly G_f_z(const SrExponentVector& f) {
    ZPoly g = ZPoly::constant(1);
    for (const auto& part : f.parts())
        if (part.exponent > 0) g = g * simple_G(part.kind, part.degree, part.exponent, f.ctx->p);
    return g;
}

}  // namespace plateau
