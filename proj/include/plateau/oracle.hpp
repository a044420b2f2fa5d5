#pragma once

// Independent ground truth for the counting results.
//
// Two routes that never touch the generating polynomials:
//  * the gcd criterion s = deg gcd(x^n - 1, A(x)) applied to every member of a
//    family, and
//  * the Walsh spectrum of each member evaluated over F_{p^n}; exact integers
//    for p = 2, exact arithmetic in Z[zeta_p] for odd p.

#include "plateau/census.hpp"
#include "plateau/fieldpoly.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace plateau {

struct QuadraticFunction {
    FamilyId family;
    /// C1: a_1..a_{(n-1)/2}; C2: a_1..a_{n/2}; D: a_0..a_{n/2}.
    std::vector<Residue> coeffs;
};

/// The i-th member of a family in base-p digit order (coeffs[0] least significant).
QuadraticFunction family_member(const FamilyId& family, std::uint64_t index);

/// C1/C2: sum a_i (x^i + x^{n-i}) with the C2 middle term a_{n/2} x^{n/2};
/// D: sum_{i=0}^{n/2} a_i (x^i + x^{n-i}).
FpPoly associate_poly(const QuadraticFunction& q);

/// deg gcd(x^n - 1, A); n for the zero function.
unsigned plateau_s(const QuadraticFunction& q);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// PLATEAU_BUDGET when set to a positive integer, otherwise the default.
std::uint64_t enumeration_budget_from_env();

struct EnumerationOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned workers = 0;  // 0: hardware concurrency
};

/// Histogram of plateau_s over every member. Throws BudgetExceeded when the
/// family has more members than the budget allows.
PlateauDistribution enumerate_distribution(const FamilyId& family, const EnumerationOptions& opts = {});

/// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
class CyclotomicInt {
  public:
    explicit CyclotomicInt(std::uint32_t p);
    /// sum_i counts[i] zeta^i for i = 0 .. p-1.
    static CyclotomicInt from_exponent_counts(std::uint32_t p, std::span<const std::int64_t> counts);

    std::uint32_t p() const { return p_; }
    const std::vector<BigInt>& comps() const { return c_; }
    bool is_rational() const;
    /// Throws InvariantViolation unless rational.
    BigInt rational_value() const;
    bool is_zero() const;

    /// zeta -> zeta^{-1}.
    CyclotomicInt conj() const;
    friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

  private:
    // Reduces a coefficient vector over zeta^0 .. zeta^{k} into the basis.
    static CyclotomicInt reduce(std::uint32_t p, std::vector<BigInt> full);

    std::uint32_t p_;
    std::vector<BigInt> c_;
};

/// Table-driven arithmetic in F_{p^n}, elements addressed by the index whose
/// base-p digits are the coefficients over the polynomial basis of ExtField(p, n).
class FieldTables {
  public:
    FieldTables(PrimeModulus p, unsigned n);

    const ExtField& field() const { return field_; }
    std::uint64_t size() const { return q_; }
    unsigned degree() const { return n_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    /// a^{p^k}.
    std::uint64_t frobenius(std::uint64_t a, unsigned k = 1) const;
    /// Absolute trace Tr_n.
    Residue trace(std::uint64_t a) const { return trace_[a]; }
    /// Tr from F_{p^from} down to F_p for an element of that subfield.
    Residue subfield_trace(std::uint64_t a, unsigned from_degree) const;
    /// Index of the polynomial-basis element x^k.
    std::uint64_t basis(unsigned k) const { return pow_p_[k]; }
    Residue digit(std::uint64_t a, unsigned k) const;

  private:
    PrimeModulus p_;
    unsigned n_;
    std::uint64_t q_;
    ExtField field_;
    std::vector<std::uint64_t> exp_, log_, frob_, pow_p_;
    std::vector<Residue> trace_;
};

struct WalshReport {
    unsigned s_from_spectrum;
    std::uint64_t support_size;
    bool magnitudes_ok;  // every |W(b)|^2 is 0 or p^{n+s}
    bool parseval_ok;    // sum |W(b)|^2 = p^{2n}
};

struct WalshLimits {
    unsigned binary_max_n = 16;
    std::uint64_t odd_pair_budget = std::uint64_t{1} << 20;  // p^n * p^n
};

/// Evaluates every member of one family over F_{p^n}.
class QuadraticEvaluator {
  public:
    /// Throws BudgetExceeded when (p, n) is beyond the limits.
    explicit QuadraticEvaluator(const FamilyId& family, const WalshLimits& limits = {});

    const FamilyId& family() const { return family_; }
    const FieldTables& tables() const { return tables_; }

    /// Q(x) for every element index x.
    std::vector<Residue> truth_table(std::span<const Residue> coeffs) const;
    /// Tr(b x) for every x.
    std::vector<Residue> trace_functional(std::uint64_t b) const;
    WalshReport walsh(std::span<const Residue> coeffs) const;
    /// weight -> number of words Q + Tr(bx) + c over all b in F_{2^n}, c in F_2.
    std::map<std::uint64_t, std::uint64_t> coset_weights(std::span<const Residue> coeffs) const;

  private:
    WalshReport walsh_binary(const std::vector<Residue>& values) const;
    WalshReport walsh_odd(const std::vector<Residue>& values) const;

    FamilyId family_;
    FieldTables tables_;
    std::vector<std::vector<Residue>> terms_;   // per coefficient: Tr(x^{p^i+1}) (C2 middle: Tr_{n/2})
    std::vector<std::uint64_t> functional_;     // b -> index of u(b), u(b)_k = Tr(b x^k)
};

WalshReport walsh_spectrum(const QuadraticFunction& q, const WalshLimits& limits = {});

}  // namespace plateau
