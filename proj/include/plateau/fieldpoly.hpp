#pragma once

// Arithmetic in F_p, F_p[x] and F_{p^d}.
//
// Everything here is immutable once constructed. Residues are machine words;
// the prime is expected to be small (desk scale), so products of two residues
// always fit in 64 bits.

#include "plateau/bigint.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plateau {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Prime factors of n without multiplicity, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

class PrimeModulus {
  public:
    /// Throws UsageError unless p is a prime below 2^31.
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t value() const { return p_; }

    Residue reduce(std::int64_t v) const {
        const std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + b) % p_); }
    Residue sub(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + p_ - b) % p_); }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} * b) % p_); }
    Residue pow(Residue a, std::uint64_t e) const;
    /// Throws UsageError for a == 0.
    Residue inv(Residue a) const;

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

  private:
    std::uint32_t p_;
};

/// Dense polynomial over F_p in canonical form (no trailing zeros).
/// The zero polynomial has an empty coefficient sequence; is_zero() is the
/// flag for its "-infinity" degree and degree() must not be consulted then.
class FpPoly {
  public:
    explicit FpPoly(PrimeModulus p) : p_(p) {}
    FpPoly(PrimeModulus p, std::span<const std::int64_t> coeffs);
    FpPoly(PrimeModulus p, std::initializer_list<std::int64_t> coeffs);
    FpPoly(PrimeModulus p, std::vector<Residue> coeffs);

    static FpPoly constant(PrimeModulus p, std::int64_t c);
    static FpPoly monomial(PrimeModulus p, std::size_t degree, std::int64_t c = 1);
    /// x^n - 1.
    static FpPoly cyclic(PrimeModulus p, std::size_t n);

    const PrimeModulus& modulus() const { return p_; }
    std::span<const Residue> coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Valid only for nonzero polynomials.
    std::size_t degree() const;
    Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Residue leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    FpPoly monic() const;
    FpPoly scaled(Residue u) const;
    Residue evaluate(Residue x) const;

    FpPoly& operator+=(const FpPoly& o);
    FpPoly& operator-=(const FpPoly& o);
    FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }

    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Lexicographic on the coefficient sequence, low degree first.
    friend std::strong_ordering lex_compare(const FpPoly& a, const FpPoly& b);

    std::string to_string(char var = 'x') const;

  private:
    void trim();

    PrimeModulus p_;
    std::vector<Residue> c_;
};

/// Quotient and remainder; throws UsageError on a zero divisor or modulus mismatch.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);

/// Monic gcd. Throws UsageError when both are zero or the moduli differ.
FpPoly poly_gcd(const FpPoly& a, const FpPoly& b);

/// x^{deg f} f(1/x). When f(0) = 0 the result has lower degree than f.
FpPoly poly_reciprocal(const FpPoly& f);

/// f = u f* for a unit u, tested as monic(f) == monic(f*).
bool is_self_reciprocal(const FpPoly& f);

/// f^e mod m by square-and-multiply; requires deg m >= 1.
FpPoly poly_powmod(const FpPoly& f, const BigInt& e, const FpPoly& m);

/// Rabin's test: x^{p^d} = x mod f and gcd(x^{p^{d/q}} - x, f) = 1 for prime q | d.
bool is_irreducible(const FpPoly& f);

/// First monic irreducible polynomial of the given degree in lexicographic
/// order of (c_{d-1}, ..., c_0) read as a base-p number.
FpPoly first_irreducible(PrimeModulus p, unsigned degree);

class ExtElement;

/// F_{p^d} = F_p[x] / (defining polynomial). A cheap shared handle.
class ExtField {
  public:
    /// Uses first_irreducible(p, degree) as the defining polynomial.
    ExtField(PrimeModulus p, unsigned degree);
    /// Throws UsageError unless the polynomial is monic and irreducible.
    explicit ExtField(FpPoly defining_poly);

    const PrimeModulus& base() const { return data_->defining.modulus(); }
    unsigned degree() const { return static_cast<unsigned>(data_->defining.degree()); }
    const FpPoly& defining_poly() const { return data_->defining; }
    BigInt order() const { return ipow(base().value(), degree()); }

    ExtElement zero() const;
    ExtElement one() const;
    /// The class of x.
    ExtElement gen() const;
    ExtElement from_residue(Residue a) const;
    ExtElement element(const FpPoly& repr) const;
    /// Element whose coefficient vector is the base-p digits of index.
    ExtElement from_index(std::uint64_t index) const;

    friend bool operator==(const ExtField& a, const ExtField& b) {
        return a.data_ == b.data_ || a.data_->defining == b.data_->defining;
    }

  private:
    struct Data {
        FpPoly defining;
    };
    std::shared_ptr<const Data> data_;
};

class ExtElement {
  public:
    ExtElement(ExtField field, FpPoly repr);

    const ExtField& field() const { return field_; }
    const FpPoly& repr() const { return repr_; }
    bool is_zero() const { return repr_.is_zero(); }
    bool is_one() const { return repr_.coeffs().size() == 1 && repr_.coeffs()[0] == 1; }
    /// Inverse of from_index.
    std::uint64_t index() const;

    ExtElement pow(const BigInt& e) const;
    /// e^{p^k}.
    ExtElement frobenius(unsigned k = 1) const;
    bool in_base_field() const { return repr_.is_constant(); }
    Residue as_residue() const;

    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a);
    friend bool operator==(const ExtElement& a, const ExtElement& b) { return a.repr_ == b.repr_; }

  private:
    ExtField field_;
    FpPoly repr_;
};

/// Sum_{j < from/to} e^{p^{to*j}}: the trace from F_{p^from} to F_{p^to}.
/// Requires to | from, from | [field:F_p] and e in F_{p^from}.
ExtElement ext_trace(const ExtElement& e, unsigned from_degree, unsigned to_degree);

}  // namespace plateau
