#include "plateau/fieldpoly.hpp"

#include "plateau/errors.hpp"

#include <algorithm>
#include <sstream>

namespace plateau {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (std::uint64_t d = 17; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (1ull << 31) || !is_prime(p))
        throw UsageError("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue PrimeModulus::pow(Residue a, std::uint64_t e) const {
    Residue r = 1 % p_;
    Residue b = a % p_;
    while (e != 0) {
        if (e & 1u) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Residue PrimeModulus::inv(Residue a) const {
    if (a % p_ == 0) throw UsageError("zero has no inverse mod " + std::to_string(p_));
    return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(PrimeModulus p, std::span<const std::int64_t> coeffs) : p_(p) {
    c_.reserve(coeffs.size());
    for (auto v : coeffs) c_.push_back(p_.reduce(v));
    trim();
}

FpPoly::FpPoly(PrimeModulus p, std::initializer_list<std::int64_t> coeffs)
    : FpPoly(p, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

FpPoly::FpPoly(PrimeModulus p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_.value();
    trim();
}

FpPoly FpPoly::constant(PrimeModulus p, std::int64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(PrimeModulus p, std::size_t degree, std::int64_t c) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = p.reduce(c);
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::cyclic(PrimeModulus p, std::size_t n) {
    std::vector<Residue> v(n + 1, 0);
    v[0] = p.neg(1);
    v[n] = 1;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FpPoly::degree() const {
    if (c_.empty()) throw UsageError("degree of the zero polynomial");
    return c_.size() - 1;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(p_.inv(leading()));
}

FpPoly FpPoly::scaled(Residue u) const {
    std::vector<Residue> v(c_);
    for (auto& x : v) x = p_.mul(x, u);
    return FpPoly(p_, std::move(v));
}

Residue FpPoly::evaluate(Residue x) const {
    Residue acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = p_.add(p_.mul(acc, x), *it);
    return acc;
}

static void require_same(const FpPoly& a, const FpPoly& b) {
    if (!(a.modulus() == b.modulus()))
        throw UsageError("polynomials over different prime fields");
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
    require_same(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = p_.add(c_[i], o.c_[i]);
    trim();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
    require_same(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = p_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    const std::uint64_t p = a.p_.value();
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
    std::vector<Residue> out(acc.begin(), acc.end());
    return FpPoly(a.p_, std::move(out));
}

std::strong_ordering lex_compare(const FpPoly& a, const FpPoly& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string FpPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    const PrimeModulus& p = a.modulus();
    if (a.is_zero() || a.degree() < b.degree()) return {FpPoly(p), a};
    std::vector<Residue> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = b.degree();
    std::vector<Residue> q(r.size() - db, 0);
    const Residue lead_inv = p.inv(b.leading());
    const auto bc = b.coeffs();
    for (std::size_t k = r.size(); k-- > db;) {
        const Residue c = p.mul(r[k], lead_inv);
        if (c == 0) continue;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = p.sub(r[k - db + j], p.mul(c, bc[j]));
    }
    r.resize(db);
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    if (a.is_zero() && b.is_zero()) throw UsageError("gcd(0, 0) is undefined");
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly poly_reciprocal(const FpPoly& f) {
    if (f.is_zero()) throw UsageError("reciprocal of the zero polynomial");
    std::vector<Residue> v(f.coeffs().rbegin(), f.coeffs().rend());
    return FpPoly(f.modulus(), std::move(v));
}

bool is_self_reciprocal(const FpPoly& f) {
    if (f.is_zero()) return false;
    if (f.coeff(0) == 0) return false;
    return f.monic() == poly_reciprocal(f).monic();
}

FpPoly poly_powmod(const FpPoly& f, const BigInt& e, const FpPoly& m) {
    require_same(f, m);
    if (m.is_zero() || m.degree() < 1) throw UsageError("powmod needs a modulus of degree >= 1");
    if (e < 0) throw UsageError("negative exponent");
    FpPoly result = FpPoly::constant(f.modulus(), 1);
    const FpPoly base = f % m;
    const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (boost::multiprecision::bit_test(e, i)) result = (result * base) % m;
    }
    return result;
}

bool is_irreducible(const FpPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw UsageError("irreducibility of a constant polynomial");
    if (!f.is_monic()) throw UsageError("irreducibility test expects a monic polynomial");
    const PrimeModulus& p = f.modulus();
    const std::size_t d = f.degree();
    if (d == 1) return true;
    const FpPoly x = FpPoly::monomial(p, 1);
    if (poly_powmod(x, ipow(p.value(), d), f) != x % f) return false;
    for (std::uint64_t q : prime_divisors(d)) {
        const FpPoly h = poly_powmod(x, ipow(p.value(), d / q), f) - x;
        if (h.is_zero() || poly_gcd(h, f).degree() != 0) return false;
    }
    return true;
}

FpPoly first_irreducible(PrimeModulus p, unsigned degree) {
    if (degree == 0) throw UsageError("extension degree must be positive");
    // Counter over the lower coefficients, most significant = c_{d-1}.
    std::vector<Residue> c(degree + 1, 0);
    c[degree] = 1;
    for (;;) {
        FpPoly cand(p, c);
        if (is_irreducible(cand)) return cand;
        std::size_t i = 0;
        while (i < degree && c[i] + 1 == p.value()) c[i++] = 0;
        if (i == degree) break;
        ++c[i];
    }
    throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(degree));
}

// ---------------------------------------------------------------------------
// Extension fields

ExtField::ExtField(PrimeModulus p, unsigned degree)
    : data_(std::make_shared<const Data>(Data{first_irreducible(p, degree)})) {}

ExtField::ExtField(FpPoly defining_poly) {
    if (defining_poly.is_zero() || defining_poly.degree() < 1 || !defining_poly.is_monic() ||
        !is_irreducible(defining_poly))
        throw UsageError("defining polynomial must be monic irreducible: " + defining_poly.to_string());
    data_ = std::make_shared<const Data>(Data{std::move(defining_poly)});
}

ExtElement ExtField::zero() const { return ExtElement(*this, FpPoly(base())); }
ExtElement ExtField::one() const { return from_residue(1); }
ExtElement ExtField::gen() const { return element(FpPoly::monomial(base(), 1)); }
ExtElement ExtField::from_residue(Residue a) const { return ExtElement(*this, FpPoly::constant(base(), a)); }
ExtElement ExtField::element(const FpPoly& repr) const { return ExtElement(*this, repr); }

ExtElement ExtField::from_index(std::uint64_t index) const {
    const std::uint32_t p = base().value();
    std::vector<Residue> c(degree(), 0);
    for (unsigned i = 0; i < degree(); ++i) {
        c[i] = static_cast<Residue>(index % p);
        index /= p;
    }
    if (index != 0) throw UsageError("element index out of range");
    return ExtElement(*this, FpPoly(base(), std::move(c)));
}

ExtElement::ExtElement(ExtField field, FpPoly repr)
    : field_(std::move(field)), repr_(std::move(repr)) {
    if (!(repr_.modulus() == field_.base())) throw UsageError("element over the wrong prime field");
    if (!repr_.is_zero() && repr_.degree() >= field_.degree()) repr_ = repr_ % field_.defining_poly();
}

std::uint64_t ExtElement::index() const {
    const std::uint32_t p = field_.base().value();
    std::uint64_t idx = 0;
    const auto c = repr_.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return idx;
}

static void require_same_field(const ExtElement& a, const ExtElement& b) {
    if (!(a.field() == b.field())) throw UsageError("elements of different extension fields");
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    require_same_field(a, b);
    return ExtElement(a.field_, a.repr_ + b.repr_);
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    require_same_field(a, b);
    return ExtElement(a.field_, a.repr_ - b.repr_);
}

ExtElement operator-(const ExtElement& a) { return a.field_.zero() - a; }

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    require_same_field(a, b);
    return ExtElement(a.field_, (a.repr_ * b.repr_) % a.field_.defining_poly());
}

ExtElement ExtElement::pow(const BigInt& e) const {
    return ExtElement(field_, poly_powmod(repr_, e, field_.defining_poly()));
}

ExtElement ExtElement::frobenius(unsigned k) const {
    ExtElement r = *this;
    const BigInt p = field_.base().value();
    for (unsigned i = 0; i < k % field_.degree(); ++i) r = r.pow(p);
    return r;
}

Residue ExtElement::as_residue() const {
    if (!in_base_field()) throw UsageError("element is not in the prime field");
    return repr_.coeff(0);
}

ExtElement ext_trace(const ExtElement& e, unsigned from_degree, unsigned to_degree) {
    const unsigned d = e.field().degree();
    if (from_degree == 0 || to_degree == 0 || d % from_degree != 0 || from_degree % to_degree != 0)
        throw UsageError("trace needs to | from | " + std::to_string(d) + ", got from=" +
                         std::to_string(from_degree) + " to=" + std::to_string(to_degree));
    if (!(e.frobenius(from_degree) == e))
        throw UsageError("element does not lie in the subfield of degree " + std::to_string(from_degree));
    ExtElement acc = e.field().zero();
    ExtElement term = e;
    for (unsigned j = 0; j < from_degree / to_degree; ++j) {
        acc = acc + term;
        term = term.frobenius(to_degree);
    }
    return acc;
}

}  // namespace plateau
