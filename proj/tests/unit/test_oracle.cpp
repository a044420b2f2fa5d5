#include "plateau/errors.hpp"
#include "plateau/oracle.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

using namespace plateau;

namespace {

QuadraticFunction qf(Family tag, std::uint32_t p, std::uint64_t n, std::vector<Residue> c) {
    return QuadraticFunction{FamilyId{tag, p, n}, std::move(c)};
}

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("associate polynomial") {
        const PrimeModulus f2(2), f3(3);
        CHECK(associate_poly(qf(Family::C2, 2, 6, {1, 0, 0})) == FpPoly(f2, {0, 1, 0, 0, 0, 1}));
        CHECK(associate_poly(qf(Family::C2, 2, 6, {0, 0, 1})) == FpPoly(f2, {0, 0, 0, 1}));
        CHECK(associate_poly(qf(Family::D, 3, 3, {1, 2})) == FpPoly(f3, {1, 2, 2, 1}));
        // even n: the middle term doubles
        CHECK(associate_poly(qf(Family::D, 3, 4, {0, 0, 1})) == FpPoly(f3, {0, 0, 2}));
        CHECK_THROWS_AS(associate_poly(qf(Family::C2, 2, 6, {1, 0})), UsageError);
        CHECK_THROWS_AS(associate_poly(qf(Family::C2, 2, 5, {1, 0})), UsageError);
    }

    TEST_CASE("plateau_s") {
        CHECK(plateau_s(qf(Family::C2, 2, 6, {0, 0, 0})) == 6);
        CHECK(plateau_s(qf(Family::D, 3, 5, {0, 0, 0})) == 5);
        CHECK(plateau_s(qf(Family::C2, 2, 6, {1, 0, 0})) == 2);
        CHECK(plateau_s(qf(Family::D, 3, 3, {1, 2})) == 2);
        CHECK(plateau_s(qf(Family::C1, 2, 1, {})) == 1);
    }

    TEST_CASE("family members") {
        const FamilyId f{Family::D, 3, 3};
        CHECK(family_member(f, 0).coeffs == std::vector<Residue>{0, 0});
        CHECK(family_member(f, 5).coeffs == std::vector<Residue>{2, 1});
        CHECK_THROWS_AS(family_member(f, 9), UsageError);
    }

    TEST_CASE("enumeration examples") {
        CHECK(enumerate_distribution(FamilyId{Family::C2, 2, 6}).counts ==
              std::map<unsigned, BigInt>{{0, 2}, {2, 3}, {4, 2}, {6, 1}});
        CHECK(enumerate_distribution(FamilyId{Family::C1, 2, 6}).counts ==
              std::map<unsigned, BigInt>{{2, 2}, {4, 1}, {6, 1}});
        CHECK(enumerate_distribution(FamilyId{Family::D, 3, 3}).counts ==
              std::map<unsigned, BigInt>{{0, 6}, {2, 2}, {3, 1}});
    }

    TEST_CASE("enumeration is independent of the worker count") {
        for (const FamilyId f : {FamilyId{Family::D, 3, 8}, FamilyId{Family::C1, 2, 17}, FamilyId{Family::D, 5, 6}}) {
            const auto base = enumerate_distribution(f, {kDefaultEnumerationBudget, 1});
            for (unsigned w : {2u, 3u, 7u, 64u}) CHECK(enumerate_distribution(f, {kDefaultEnumerationBudget, w}) == base);
        }
    }

    TEST_CASE("enumeration budget") {
        const FamilyId f{Family::D, 3, 12};  // 3^7 = 2187 tuples
        try {
            enumerate_distribution(f, {1000, 1});
            FAIL("expected a refusal");
        } catch (const BudgetExceeded& e) {
            CHECK(std::string(e.what()).find("2187") != std::string::npos);
        }
        CHECK(enumerate_distribution(f, {2187, 2}).total() == 2187);

        CHECK(setenv("PLATEAU_BUDGET", "123", 1) == 0);
        CHECK(enumeration_budget_from_env() == 123);
        CHECK(setenv("PLATEAU_BUDGET", "lots", 1) == 0);
        CHECK_THROWS_AS(enumeration_budget_from_env(), UsageError);
        CHECK(unsetenv("PLATEAU_BUDGET") == 0);
        CHECK(enumeration_budget_from_env() == kDefaultEnumerationBudget);
    }

    TEST_CASE("cyclotomic integers") {
        const std::int64_t all_ones[] = {1, 1, 1, 1, 1};
        CHECK(CyclotomicInt::from_exponent_counts(5, all_ones).is_zero());

        const std::int64_t zeta[] = {0, 1, 0, 0, 0};
        const auto z = CyclotomicInt::from_exponent_counts(5, zeta);
        CHECK_FALSE(z.is_rational());
        CHECK_THROWS_AS(z.rational_value(), InvariantViolation);
        CHECK((z * z.conj()).rational_value() == 1);

        // |1 + zeta|^2 = 2 + zeta + zeta^{-1}: not rational for p = 5
        const std::int64_t one_plus[] = {1, 1, 0, 0, 0};
        const auto w = CyclotomicInt::from_exponent_counts(5, one_plus);
        CHECK_FALSE((w * w.conj()).is_rational());

        // Gauss sum for p = 3: sum_x zeta^{x^2} = 1 + 2 zeta, |G|^2 = 3
        const std::int64_t gauss[] = {1, 2, 0};
        const auto g = CyclotomicInt::from_exponent_counts(3, gauss);
        CHECK((g * g.conj()).rational_value() == 3);
        CHECK(g + g.conj() == CyclotomicInt::from_exponent_counts(3, std::vector<std::int64_t>{2, 2, 2}));
        CHECK_THROWS_AS(CyclotomicInt(2), UsageError);
    }

    TEST_CASE("field tables agree with polynomial arithmetic") {
        std::mt19937_64 rng(17);
        for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 6}, {3, 4}, {5, 3}, {7, 2}}) {
            const FieldTables t(PrimeModulus(p), n);
            const ExtField& f = t.field();
            std::uniform_int_distribution<std::uint64_t> pick(0, t.size() - 1);
            for (int trial = 0; trial < 100; ++trial) {
                const std::uint64_t a = pick(rng), b = pick(rng);
                const ExtElement ea = f.from_index(a), eb = f.from_index(b);
                CHECK(t.mul(a, b) == (ea * eb).index());
                CHECK(t.add(a, b) == (ea + eb).index());
                CHECK(t.frobenius(a) == ea.frobenius().index());
                CHECK(t.trace(a) == ext_trace(ea, n, 1).as_residue());
            }
        }
    }

    TEST_CASE("walsh examples") {
        const auto c1 = walsh_spectrum(qf(Family::C1, 2, 5, {1, 0}));
        CHECK(c1.s_from_spectrum == 1);
        CHECK(c1.support_size == 16);
        CHECK(c1.magnitudes_ok);
        CHECK(c1.parseval_ok);

        const auto d = walsh_spectrum(qf(Family::D, 3, 3, {1, 0}));
        CHECK(d.s_from_spectrum == 0);
        CHECK(d.support_size == 27);
        CHECK(d.magnitudes_ok);

        for (const auto& q : {qf(Family::C2, 2, 4, {0, 0}), qf(Family::D, 5, 2, {0, 0})}) {
            const auto z = walsh_spectrum(q);
            CHECK(z.s_from_spectrum == q.family.n);
            CHECK(z.support_size == 1);
            CHECK(z.parseval_ok);
        }
    }

    TEST_CASE("walsh limits") {
        CHECK_THROWS_AS(QuadraticEvaluator(FamilyId{Family::D, 3, 7}), BudgetExceeded);
        CHECK_THROWS_AS(QuadraticEvaluator(FamilyId{Family::C1, 2, 17}), BudgetExceeded);
        CHECK_NOTHROW(QuadraticEvaluator(FamilyId{Family::C1, 2, 17}, WalshLimits{17, 1}));
    }

    TEST_CASE("spectrum and gcd criterion agree on every member") {
        std::vector<FamilyId> sweep;
        for (std::uint64_t n = 1; n <= 10; ++n) {
            sweep.push_back({Family::C1, 2, n});
            if (n % 2 == 0) sweep.push_back({Family::C2, 2, n});
        }
        for (std::uint64_t n = 1; n <= 5; ++n) sweep.push_back({Family::D, 3, n});
        for (std::uint64_t n = 1; n <= 3; ++n) sweep.push_back({Family::D, 5, n});
        sweep.push_back({Family::D, 7, 2});
        for (const auto& f : sweep) {
            CAPTURE(f.to_string());
            const QuadraticEvaluator ev(f);
            const auto total = static_cast<std::uint64_t>(f.size());
            for (std::uint64_t i = 0; i < total; ++i) {
                const auto q = family_member(f, i);
                const unsigned s = plateau_s(q);
                const auto r = ev.walsh(q.coeffs);
                CHECK(r.s_from_spectrum == s);
                CHECK(r.magnitudes_ok);
                CHECK(r.parseval_ok);
                CHECK(BigInt(r.support_size) == ipow(f.p, f.n - s));
            }
        }
    }

    TEST_CASE("distinct tuples give distinct functions") {
        for (const FamilyId f : {FamilyId{Family::D, 3, 2}, FamilyId{Family::D, 3, 4}, FamilyId{Family::D, 3, 6},
                                 FamilyId{Family::D, 5, 2}, FamilyId{Family::D, 5, 4}, FamilyId{Family::D, 7, 2},
                                 FamilyId{Family::D, 3, 5}, FamilyId{Family::C2, 2, 8}, FamilyId{Family::C1, 2, 9}}) {
            CAPTURE(f.to_string());
            const QuadraticEvaluator ev(f, WalshLimits{16, std::uint64_t{1} << 24});
            std::set<std::vector<Residue>> seen;
            const auto total = static_cast<std::uint64_t>(f.size());
            for (std::uint64_t i = 0; i < total; ++i) seen.insert(ev.truth_table(family_member(f, i).coeffs));
            CHECK(seen.size() == total);
        }
    }
}
