#pragma once

// Counting over the monoid of monic self-reciprocal polynomials of even degree.
//
// The prime elements of that monoid dividing some x^n - 1 are (x-1)^2,
// (x+1)^2 (odd p only; for p = 2 it coincides with (x-1)^2) and the prime
// self-reciprocal factors r_i. An element is stored as an exponent vector over
// those primes, so divisors are enumerated by mixed-radix counting and never by
// polynomial arithmetic.

#include "plateau/bigint.hpp"
#include "plateau/factorization.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace plateau {

/// Polynomial in z with arbitrary precision coefficients, canonical form.
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs);
    static ZPoly constant(const BigInt& c);
    static ZPoly monomial(std::size_t degree, const BigInt& c = 1);

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    BigInt coeff(std::ptrdiff_t t) const;

    BigInt evaluate(const BigInt& z) const;
    /// q(z) = this(k z).
    ZPoly scale_argument(const BigInt& k) const;
    /// Divides by z^k; throws InvariantViolation unless the low coefficients vanish.
    ZPoly shift_down(std::size_t k) const;
    bool all_nonnegative() const;

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const BigInt& k, const ZPoly& a);
    friend bool operator==(const ZPoly&, const ZPoly&) = default;

    std::string to_string() const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

enum class PrimeKind { LinearMinus, LinearPlus, SrPrime };

/// The primes available for a given x^n - 1.
struct SrContext {
    std::uint32_t p;
    bool distinct_plus;                 // (x+1)^2 is a separate prime (odd p)
    std::vector<unsigned> sr_degrees;   // deg r_i

    static std::shared_ptr<const SrContext> from(const SrFactorization& f);
    static std::shared_ptr<const SrContext> make(std::uint32_t p, bool distinct_plus,
                                                 std::vector<unsigned> sr_degrees);
};

/// f = (x-1)^{2 e_minus} (x+1)^{2 e_plus} prod r_i^{e_i}.
struct SrExponentVector {
    std::shared_ptr<const SrContext> ctx;
    unsigned e_minus = 0;
    unsigned e_plus = 0;
    std::vector<unsigned> e;  // one per r_i

    /// The identity element f = 1.
    static SrExponentVector one(std::shared_ptr<const SrContext> ctx);

    unsigned degree() const;
    bool is_one() const;
    /// Flattened (kind, degree, exponent) triples, one per prime.
    struct Part {
        PrimeKind kind;
        unsigned degree;
        unsigned exponent;
    };
    std::vector<Part> parts() const;
    static SrExponentVector from_parts(std::shared_ptr<const SrContext> ctx, const std::vector<unsigned>& exps);
    /// Exponents in parts() order.
    std::vector<unsigned> exponents() const;

    friend bool operator==(const SrExponentVector& a, const SrExponentVector& b) {
        return a.e_minus == b.e_minus && a.e_plus == b.e_plus && a.e == b.e;
    }
};

/// Calls fn on every monic even-degree self-reciprocal divisor of f.
void for_each_divisor(const SrExponentVector& f, const std::function<void(const SrExponentVector&)>& fn);

int mu_p(const SrExponentVector& f);

/// phi_p(r^j) for a prime element r of the given kind and degree; j >= 1.
BigInt phi_prime_power(PrimeKind kind, unsigned degree, unsigned j, std::uint32_t p);

/// Product over prime-power parts; phi_p(1) = 0.
BigInt phi_p(const SrExponentVector& f);
/// sum_{d | f} mu_p(d) p^{(deg f - deg d)/2}; phi_p(1) = 0.
BigInt phi_p_mobius(const SrExponentVector& f);

/// N_n(f; t): 1 for t = 0, sum of phi_p(d) over divisors of degree t for even
/// t > 0, and 0 otherwise.
BigInt N_f_t(const SrExponentVector& f, long t);
/// All N_n(f; t), t = 0 .. deg f, from a single divisor sweep.
std::vector<BigInt> N_table(const SrExponentVector& f);

/// 1 + sum_{j=1}^k phi_p(r^j) z^{j deg r}.
ZPoly simple_G(PrimeKind kind, unsigned degree, unsigned k, std::uint32_t p);
/// Product of simple_G over the prime-power parts of f.
ZPoly G_f_z(const SrExponentVector& f);

}  // namespace plateau
