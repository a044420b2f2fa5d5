#include "plateau/errors.hpp"
#include "plateau/oracle.hpp"
#include "plateau/rmcode.hpp"

#include <doctest.h>

using namespace plateau;

namespace {

std::map<BigInt, BigInt> as_map(const WeightEnumerator& we) {
    std::map<BigInt, BigInt> m;
    for (const auto& r : we.rows) m[r.weight] = r.multiplicity;
    return m;
}

// Hamming weights of every word Q + Tr(bx) + c over the whole family.
std::map<BigInt, BigInt> direct_weights(Family code, std::uint64_t n) {
    const FamilyId f{code, 2, n};
    const QuadraticEvaluator ev(f);
    std::map<BigInt, BigInt> out;
    const auto total = static_cast<std::uint64_t>(f.size());
    for (std::uint64_t i = 0; i < total; ++i)
        for (const auto& [w, c] : ev.coset_weights(family_member(f, i).coeffs)) out[BigInt(w)] += c;
    return out;
}

}  // namespace

TEST_SUITE("rmcode") {
    TEST_CASE("C2, n = 6 table") {
        const auto we = weight_enumerator(Family::C2, 6);
        const std::map<BigInt, BigInt> want{{0, 1},    {16, 8},  {24, 48}, {28, 128}, {32, 654},
                                            {36, 128}, {40, 48}, {48, 8},  {64, 1}};
        CHECK(as_map(we) == want);
        CHECK(we.total() == 1024);
        CHECK(we.multiplicity(32) == 654);
    }

    TEST_CASE("C1, n = 3 table") {
        const auto we = weight_enumerator(Family::C1, 3);
        CHECK(as_map(we) == std::map<BigInt, BigInt>{{0, 1}, {2, 4}, {4, 22}, {6, 4}, {8, 1}});
        CHECK(we.total() == 32);
    }

    TEST_CASE("smallest case") {
        const auto we = weight_enumerator(Family::C1, 1);
        CHECK(as_map(we) == std::map<BigInt, BigInt>{{0, 1}, {1, 2}, {2, 1}});
    }

    TEST_CASE("weight polynomial is G(2z)") {
        CHECK(weight_polynomial(Family::C2, 6) == ZPoly({1, 0, 8, 0, 48, 0, 128}));
        CHECK(weight_polynomial(Family::C1, 5) == ZPoly({1, 0, 0, 0, 48}));
    }

    TEST_CASE("structural invariants") {
        for (std::uint64_t n = 1; n <= 24; ++n)
            for (Family code : {Family::C1, Family::C2}) {
                if (code == Family::C2 && n % 2) continue;
                CAPTURE(n);
                const auto we = weight_enumerator(code, n);
                CHECK(we.total() == ipow(2, n + 1) * FamilyId{code, 2, n}.size());
                const BigInt half = ipow(2, n - 1);
                for (const auto& r : we.rows) CHECK(we.multiplicity(2 * half - r.weight) == r.multiplicity);
                for (std::size_t i = 1; i < we.rows.size(); ++i) CHECK(we.rows[i - 1].weight < we.rows[i].weight);
                BigInt moment = 0;
                for (const auto& r : we.rows) moment += r.multiplicity * (r.weight - half);
                CHECK(moment == 0);
            }
    }

    TEST_CASE("direct codeword enumeration") {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            CAPTURE(n);
            CHECK(as_map(weight_enumerator(Family::C1, n)) == direct_weights(Family::C1, n));
            if (n % 2 == 0) CHECK(as_map(weight_enumerator(Family::C2, n)) == direct_weights(Family::C2, n));
        }
    }

    TEST_CASE("weight of a function from its Walsh value at zero") {
        for (const FamilyId f : {FamilyId{Family::C1, 2, 9}, FamilyId{Family::C2, 2, 8}}) {
            const QuadraticEvaluator ev(f);
            for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(f.size()); ++i) {
                const auto tt = ev.truth_table(family_member(f, i).coeffs);
                std::int64_t wt = 0, w0 = 0;
                for (auto b : tt) {
                    wt += b;
                    w0 += b ? -1 : 1;
                }
                CHECK(2 * wt == (std::int64_t{1} << f.n) - w0);
            }
        }
    }

    TEST_CASE("code parameters") {
        CHECK(code_params(Family::C1, 7) == CodeParams{128, 11, 56});
        CHECK(code_params(Family::C1, 3) == CodeParams{8, 5, 2});
        CHECK(code_params(Family::C1, 5) == CodeParams{32, 8, 12});
        // C2: dimension (3n + 2) / 2, computed from the table
        for (std::uint64_t n = 2; n <= 20; n += 2)
            CHECK(code_params_from_enumerator(weight_enumerator(Family::C2, n)).dimension == (3 * n + 2) / 2);
        for (std::uint64_t n = 1; n <= 25; n += 2) {
            CAPTURE(n);
            CHECK(code_params(Family::C1, n) == code_params_from_enumerator(weight_enumerator(Family::C1, n)));
        }
        CHECK_THROWS_AS(code_params(Family::C1, 8), UsageError);
        CHECK_THROWS_AS(code_params(Family::C2, 8), UsageError);
        CHECK_THROWS_AS(weight_enumerator(Family::D, 5), UsageError);
        CHECK_THROWS_AS(weight_enumerator(Family::C2, 5), UsageError);
    }
}
