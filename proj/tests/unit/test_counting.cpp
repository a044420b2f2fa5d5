#include "plateau/counting.hpp"
#include "plateau/errors.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace plateau;
using plateau::testing::full_divisor;
using plateau::testing::realize;

namespace {

// |{g : g palindromic, g != 0, deg g even, deg g < deg f, gcd(g, f) = 1}|
BigInt phi_by_enumeration(const FpPoly& f) {
    const PrimeModulus p = f.modulus();
    const std::size_t deg = f.degree();
    BigInt count = 0;
    for (std::size_t k = 0; 2 * k < deg; ++k) {
        // a_0 .. a_k with a_0 != 0, mirrored to a_{2k} .. a_k
        std::vector<Residue> half(k + 1, 0);
        half[0] = 1;
        for (;;) {
            std::vector<Residue> c(2 * k + 1);
            for (std::size_t i = 0; i <= k; ++i) c[i] = c[2 * k - i] = half[i];
            if (poly_gcd(FpPoly(p, c), f).degree() == 0) ++count;
            std::size_t i = k + 1;
            bool done = true;
            while (i-- > 0) {
                const Residue lo = i == 0 ? 1 : 0;
                if (half[i] + 1 < p.value()) {
                    ++half[i];
                    done = false;
                    break;
                }
                half[i] = lo;
            }
            if (done) break;
        }
    }
    return count;
}

struct Case {
    std::uint32_t p;
    std::uint64_t n;
};
const Case kIdentityCases[] = {{2, 6}, {2, 12}, {3, 9}, {3, 12}, {5, 10}};

}  // namespace

TEST_SUITE("counting") {
    TEST_CASE("ZPoly basics") {
        const ZPoly a({1, 2, 0, 0});
        CHECK(a.degree() == 1);
        CHECK(ZPoly().degree() == -1);
        CHECK((a * a) == ZPoly({1, 4, 4}));
        CHECK(a.scale_argument(2) == ZPoly({1, 4}));
        CHECK(a.evaluate(3) == 7);
        CHECK(ZPoly({0, 0, 5}).shift_down(2) == ZPoly({5}));
        CHECK(a.to_string() == "1 + 2z");
    }

    TEST_CASE("mobius function") {
        auto ctx = SrContext::make(3, true, {2, 4});
        SrExponentVector f = SrExponentVector::one(ctx);
        f.e = {0, 0};
        CHECK(mu_p(f) == 1);
        f.e = {1, 1};
        CHECK(mu_p(f) == 1);
        f.e = {1, 0};
        CHECK(mu_p(f) == -1);
        f.e = {2, 0};
        CHECK(mu_p(f) == 0);
        f.e = {0, 0};
        f.e_minus = 1;
        CHECK(mu_p(f) == -1);
        f.e_plus = 1;
        CHECK(mu_p(f) == 1);
        f.e_plus = 2;
        CHECK(mu_p(f) == 0);
    }

    TEST_CASE("phi on prime powers") {
        CHECK(phi_prime_power(PrimeKind::LinearPlus, 2, 1, 3) == 2);
        CHECK(phi_prime_power(PrimeKind::LinearMinus, 2, 3, 5) == 100);
        CHECK(phi_prime_power(PrimeKind::SrPrime, 2, 1, 2) == 1);
        CHECK(phi_prime_power(PrimeKind::SrPrime, 6, 9, 3) == ipow(3, 27) - ipow(3, 24));
        CHECK_THROWS_AS(phi_prime_power(PrimeKind::SrPrime, 2, 0, 2), UsageError);
    }

    TEST_CASE("phi examples") {
        auto ctx = SrContext::make(3, true, {2});
        SrExponentVector f = SrExponentVector::one(ctx);
        f.e = {0};
        CHECK(phi_p(f) == 0);
        CHECK(phi_p_mobius(f) == 0);
        f.e_minus = 1;
        f.e = {1};
        CHECK(phi_p(f) == 4);
        const PrimeModulus f3(3);
        CHECK(phi_by_enumeration(FpPoly(f3, {1, -2, 1}) * FpPoly(f3, {1, 0, 1})) == 4);

        // (x^2+x+1)^2 over F_2: 0 + 1 + 2 = 2^2 - 1
        auto c2 = SrContext::make(2, false, {2});
        SrExponentVector g = SrExponentVector::one(c2);
        g.e = {2};
        BigInt sum = 0;
        for_each_divisor(g, [&](const SrExponentVector& d) { sum += phi_p(d); });
        CHECK(sum == 3);
        CHECK(N_f_t(g, 4) == 2);
        CHECK(N_f_t(g, 0) == 1);
        CHECK(N_f_t(g, 3) == 0);
        CHECK(G_f_z(g) == ZPoly({1, 0, 1, 0, 2}));
        CHECK(G_f_z(SrExponentVector::one(c2)) == ZPoly::constant(1));
    }

    TEST_CASE("simple G for (x-1)^{p^v+1}") {
        auto ctx = SrContext::make(3, true, {});
        SrExponentVector f = SrExponentVector::one(ctx);
        f.e_minus = 2;
        CHECK(G_f_z(f) == ZPoly({1, 0, 2, 0, 6}));
        CHECK(simple_G(PrimeKind::LinearMinus, 2, 2, 3) == ZPoly({1, 0, 2, 0, 6}));
    }

    TEST_CASE("divisor enumeration covers the exponent box") {
        auto ctx = SrContext::make(5, true, {2, 4});
        SrExponentVector f = SrExponentVector::one(ctx);
        f.e_minus = 2;
        f.e_plus = 1;
        f.e = {3, 1};
        std::size_t count = 0;
        for_each_divisor(f, [&](const SrExponentVector& d) {
            ++count;
            CHECK(d.degree() <= f.degree());
            CHECK(d.degree() % 2 == 0);
        });
        CHECK(count == 3 * 2 * 4 * 2);
    }

    TEST_CASE("identity suite over the divisors of x^n - 1") {
        for (const Case c : kIdentityCases) {
            CAPTURE(c.p);
            CAPTURE(c.n);
            const auto sr = sr_factorize(c.n, PrimeModulus(c.p));
            const auto full = full_divisor(sr);
            for_each_divisor(full, [&](const SrExponentVector& f) {
                const BigInt pf = phi_p(f);
                CHECK(pf == phi_p_mobius(f));

                BigInt sum = 0;
                for_each_divisor(f, [&](const SrExponentVector& d) { sum += phi_p(d); });
                CHECK(sum == ipow(c.p, f.degree() / 2) - 1);

                const ZPoly g = G_f_z(f);
                const auto table = N_table(f);
                CHECK(g.evaluate(1) == ipow(c.p, f.degree() / 2));
                CHECK(g.all_nonnegative());
                for (std::size_t t = 0; t <= f.degree(); ++t) {
                    CHECK(g.coeff(t) == table[t]);
                    if (t % 2 == 1) CHECK(g.coeff(t) == 0);
                }
                CHECK(N_f_t(f, static_cast<long>(f.degree())) == table[f.degree()]);

                // multiplicativity: G(f) = G(a) G(f / a) for a = the first prime power of f
                const auto parts = f.parts();
                std::vector<unsigned> lead(parts.size(), 0), rest = f.exponents();
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (rest[i] != 0) {
                        lead[i] = rest[i];
                        rest[i] = 0;
                        break;
                    }
                CHECK(g == G_f_z(SrExponentVector::from_parts(f.ctx, lead)) *
                               G_f_z(SrExponentVector::from_parts(f.ctx, rest)));
            });
        }
    }

    TEST_CASE("phi agrees with direct enumeration of K(f)") {
        for (const Case c : kIdentityCases) {
            CAPTURE(c.p);
            CAPTURE(c.n);
            const auto sr = sr_factorize(c.n, PrimeModulus(c.p));
            for_each_divisor(full_divisor(sr), [&](const SrExponentVector& f) {
                if (f.is_one()) return;
                CHECK(phi_p(f) == phi_by_enumeration(realize(f, sr)));
            });
        }
    }
}
