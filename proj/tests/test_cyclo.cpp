#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qmzv/cyclo.hpp"
#include "qmzv/fixtures.hpp"

using namespace qmzv;

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == poly_desc({1, -1}));
    CHECK(cyclotomic_poly(2) == poly_desc({1, 1}));
    CHECK(cyclotomic_poly(3) == poly_desc({1, 1, 1}));
    CHECK(cyclotomic_poly(4) == poly_desc({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == poly_desc({1, -1, 1}));
    CHECK(cyclotomic_poly(8) == poly_desc({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_poly(12) == poly_desc({1, 0, -1, 0, 1}));
    // Phi_105 is the first with a coefficient outside {-1, 0, 1}
    const auto p105 = cyclotomic_poly(105);
    CHECK(p105.degree() == 48);
    CHECK(std::find(p105.coeffs().begin(), p105.coeffs().end(), Rat(-2)) != p105.coeffs().end());
}

TEST_CASE("product of Phi_d over divisors is x^n - 1") {
    for (unsigned n = 1; n <= 40; ++n) {
        RatPoly prod(1);
        unsigned phi_sum = 0;
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d) continue;
            prod = prod * cyclotomic_poly(d);
            phi_sum += euler_phi(d);
            CHECK(cyclotomic_poly(d).degree() == euler_phi(d));
        }
        CHECK(prod == RatPoly::monomial(n, Rat(1)) - RatPoly(1));
        CHECK(phi_sum == n);
    }
}

TEST_CASE("Euler phi against gcd count") {
    for (unsigned n = 1; n <= 60; ++n) {
        unsigned count = 0;
        for (unsigned k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
        CHECK(euler_phi(n) == count);
    }
}

TEST_CASE("field arithmetic matches complex numerics") {
    std::mt19937_64 rng(17);
    for (unsigned n : {3u, 5u, 7u, 9u, 12u, 15u, 16u}) {
        const auto ctx = CycloCtx::make(n);
        for (int t = 0; t < 10; ++t) {
            const CycloElem a = oracle::random_elem(rng, ctx), b = oracle::random_elem(rng, ctx);
            const auto za = oracle::to_complex(a), zb = oracle::to_complex(b);
            CHECK(std::abs(oracle::to_complex(a * b) - za * zb) < 1e-9L);
            CHECK(std::abs(oracle::to_complex(a + b) - (za + zb)) < 1e-9L);
            if (!a.is_zero()) CHECK(std::abs(oracle::to_complex(a.inverse()) - 1.0L / za) < 1e-6L);
        }
    }
}

TEST_CASE("inverse round trip and powers of zeta") {
    std::mt19937_64 rng(19);
    for (unsigned n = 2; n <= 40; ++n) {
        const auto ctx = CycloCtx::make(n);
        const CycloElem z = CycloElem::zeta(ctx);
        CHECK(ring_pow(z, n) == CycloElem(1));
        if (n > 1) CHECK(!(ring_pow(z, 1) == CycloElem(1)));
        CHECK(CycloElem::zeta_power(ctx, -1) * z == CycloElem(1));
        CHECK(CycloElem::zeta_power(ctx, static_cast<long>(n) + 3) == CycloElem::zeta_power(ctx, 3));
        for (int t = 0; t < 3; ++t) {
            const CycloElem a = oracle::random_elem(rng, ctx);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == CycloElem(1));
            CHECK(exact_div(a, a) == CycloElem(1));
        }
        CHECK(product_one_minus_powers(ctx) == Rat(static_cast<long>(n)));
    }
}

TEST_CASE("Galois action") {
    std::mt19937_64 rng(23);
    for (unsigned n : {5u, 8u, 12u, 21u}) {
        const auto ctx = CycloCtx::make(n);
        for (long a = 1; a < static_cast<long>(n); ++a) {
            if (std::gcd(a, static_cast<long>(n)) != 1) continue;
            const CycloElem x = oracle::random_elem(rng, ctx), y = oracle::random_elem(rng, ctx);
            CHECK((x * y).galois(a) == x.galois(a) * y.galois(a));
            CHECK((x + y).galois(a) == x.galois(a) + y.galois(a));
            CHECK(CycloElem::zeta(ctx).galois(a) == CycloElem::zeta_power(ctx, a));
            CHECK(CycloElem(ctx, {Rat(3, 7)}).galois(a) == CycloElem(Rat(3, 7)));
        }
        // The trace of an element is Galois stable, hence rational.
        const CycloElem x = oracle::random_elem(rng, ctx);
        CycloElem trace(0);
        for (long a = 1; a < static_cast<long>(n); ++a)
            if (std::gcd(a, static_cast<long>(n)) == 1) trace += x.galois(a);
        CHECK(trace.is_rational());
    }
}

TEST_CASE("scalars, contexts and errors") {
    const auto c5 = CycloCtx::make(5);
    const auto c7 = CycloCtx::make(7);
    const CycloElem z5 = CycloElem::zeta(c5), z7 = CycloElem::zeta(c7);
    CHECK((CycloElem(2) * z5).ctx() == c5);
    CHECK(CycloElem(Rat(1, 2)) + CycloElem(Rat(1, 2)) == CycloElem(1));
    CHECK_THROWS_AS(z5 + z7, ContextMismatch);
    CHECK_THROWS_AS(z5.as_rational(), NotRational);
    CHECK_THROWS_AS(CycloElem(c5, {}).inverse(), ZeroInverse);
    CHECK_THROWS_AS(exact_div(z5, CycloElem(0)), ZeroInverse);
    // 1 + z + ... + z^4 = 0
    CycloElem sum(0);
    for (long k = 0; k < 5; ++k) sum += CycloElem::zeta_power(c5, k);
    CHECK(sum.is_zero());
    CHECK((z5 * CycloElem::zeta_power(c5, 4)).as_rational() == Rat(1));
    try {
        (void)z5.as_rational();
    } catch (const NotRational& e) {
        CHECK(!e.element().empty());
    }
}

TEST_CASE("reduction of long vectors") {
    const auto ctx = CycloCtx::make(9);
    std::vector<Rat> big(40, Rat(0));
    big[39] = Rat(1);  // zeta^39 = zeta^3
    CHECK(CycloElem(ctx, big) == CycloElem::zeta_power(ctx, 3));
    CHECK(CycloElem::from_poly(ctx, RatPoly::monomial(9, Rat(1))) == CycloElem(1));
}
