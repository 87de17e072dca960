#include <doctest.h>

#include "oracles.hpp"
#include "qmzv/combinatorics.hpp"
#include "qmzv/interpolate.hpp"
#include "qmzv/matrix.hpp"
#include "qmzv/series.hpp"

using namespace qmzv;

TEST_CASE("rational basics") {
    CHECK(Rat(6, 4).to_string() == "3/2");
    CHECK(Rat(-6, 4) == Rat(-3, 2));
    CHECK(Rat(4, -2) == Rat(-2));
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
    CHECK_THROWS_AS(Rat(0).inverse(), DivisionByZero);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 8).to_decimal(4) == "-0.1250");
    CHECK(Rat(2, 3).to_decimal(3) == "0.667");
    CHECK(Rat(17, 7).to_decimal(0) == "2");
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    // C(-1, k) = (-1)^k
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(factorial(10) == 3628800);
    // Pascal's rule against the library itself over a range
    for (long n = 1; n <= 30; ++n)
        for (long k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE_TEMPLATE("ring axioms on random elements", R, Rat, RatPoly, BiPoly) {
    std::mt19937_64 rng(7);
    auto draw = [&]() -> R {
        if constexpr (std::is_same_v<R, Rat>) return oracle::random_rat(rng);
        else if constexpr (std::is_same_v<R, RatPoly>) return oracle::random_poly(rng);
        else {
            std::vector<RatPoly> c(3);
            for (auto& x : c) x = oracle::random_poly(rng, 2);
            return BiPoly(std::move(c));
        }
    };
    for (int t = 0; t < 40; ++t) {
        const R a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == R(0));
        CHECK(a * R(1) == a);
        if (!is_zero(b)) CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("polynomial operations") {
    const RatPoly x = RatPoly::variable();
    const RatPoly p = x * x - RatPoly(1);
    CHECK(p.degree() == 2);
    CHECK(RatPoly().degree() == std::nullopt);
    CHECK(p.eval(Rat(3)) == Rat(8));
    CHECK(p.derivative() == RatPoly{Rat(0), Rat(2)});
    const auto [q, r] = p.divmod(x - RatPoly(1));
    CHECK(q == x + RatPoly(1));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(exact_div(p, x), NotExactlyDivisible);
    CHECK_THROWS_AS(p.divmod(RatPoly()), DivisionByZero);
    CHECK(p.to_string() == "x^2 - 1");
    CHECK((Rat(1, 2) * x).to_string() == "1/2*x");
}

TEST_CASE("division with remainder reconstructs the dividend") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const RatPoly a = oracle::random_poly(rng, 7);
        RatPoly b = oracle::random_poly(rng, 3);
        if (b.is_zero()) continue;
        const auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    }
}

TEST_CASE("series log and exp are inverse") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rat> c(8);
        for (auto& v : c) v = oracle::random_rat(rng);
        c[0] = Rat(0);
        const TruncSeries<Rat> f(c, 8);
        CHECK(f.exp().log() == f);
        c[0] = Rat(1);
        const TruncSeries<Rat> g(c, 8);
        CHECK(g.log().exp() == g);
        CHECK(g * g.inverse() == TruncSeries<Rat>::one(8));
    }
}

TEST_CASE("series against known expansions") {
    // log(1 + t) = t - t^2/2 + t^3/3 - ...
    const TruncSeries<Rat> one_plus_t(std::vector<Rat>{Rat(1), Rat(1)}, 6);
    const auto lg = one_plus_t.log();
    for (unsigned k = 1; k < 6; ++k) CHECK(lg[k] == Rat(k % 2 ? 1 : -1, static_cast<long>(k)));
    // exp(t) = sum t^k / k!
    const TruncSeries<Rat> t(std::vector<Rat>{Rat(0), Rat(1)}, 7);
    const auto e = t.exp();
    for (unsigned k = 0; k < 7; ++k) CHECK(e[k] == Rat(1) / Rat(factorial(k)));
    // 1/(1 - t) composed with 2t is 1/(1 - 2t)
    const auto geo = (TruncSeries<Rat>::one(6) - t.truncated(6)).inverse();
    const TruncSeries<Rat> two_t(std::vector<Rat>{Rat(0), Rat(2)}, 6);
    const auto comp = geo.compose(two_t);
    for (unsigned k = 0; k < 6; ++k) CHECK(comp[k] == Rat(1L << k));
    CHECK(t.derivative().integral() == t.truncated(7));
    CHECK_THROWS_AS(TruncSeries<Rat>(std::vector<Rat>{Rat(0), Rat(1)}, 4).inverse(), NonInvertibleConstantTerm);
    CHECK_THROWS_AS(TruncSeries<Rat>(std::vector<Rat>{Rat(2)}, 4).log(), BadConstantTerm);
    CHECK_THROWS_AS(TruncSeries<Rat>(std::vector<Rat>{Rat(1)}, 4).exp(), BadConstantTerm);
}

TEST_CASE("series over polynomial coefficients") {
    // (1 + X t) has log sum (-1)^{k-1} X^k t^k / k
    const RatPoly X = RatPoly::variable();
    const TruncSeries<RatPoly> f(std::vector<RatPoly>{RatPoly(1), X}, 5);
    const auto lg = f.log();
    for (unsigned k = 1; k < 5; ++k)
        CHECK(lg[k] == RatPoly::monomial(k, Rat(k % 2 ? 1 : -1, static_cast<long>(k))));
}

TEST_CASE("determinants agree") {
    std::mt19937_64 rng(5);
    SUBCASE("Bareiss matches Leibniz") {
        for (std::size_t d = 1; d <= 6; ++d) {
            SquareMatrix<Rat> m(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m(i, j) = oracle::random_rat(rng);
            CHECK(det_fraction_free(m) == oracle::det_leibniz(m));
        }
        SquareMatrix<Rat> sing{{Rat(0), Rat(1)}, {Rat(0), Rat(2)}};
        CHECK(det_fraction_free(sing) == Rat(0));
        SquareMatrix<Rat> pivot{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
        CHECK(det_fraction_free(pivot) == Rat(-1));
    }
    SUBCASE("Hessenberg matches Bareiss up to d = 8") {
        for (std::size_t d = 0; d <= 8; ++d) {
            for (int t = 0; t < 5; ++t) {
                SquareMatrix<Rat> m(d);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d && j <= i + 1; ++j) m(i, j) = oracle::random_rat(rng);
                CHECK(det_hessenberg(m) == det_fraction_free(m));
            }
        }
        SquareMatrix<Rat> full{{Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5), Rat(6)}, {Rat(7), Rat(8), Rat(10)}};
        CHECK_THROWS_AS(det_hessenberg(full), ShapeViolation);
    }
    SUBCASE("polynomial entries") {
        for (std::size_t d = 1; d <= 4; ++d) {
            SquareMatrix<RatPoly> m(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m(i, j) = oracle::random_poly(rng, 2);
            CHECK(det_fraction_free(m) == oracle::det_leibniz(m));
        }
    }
}

TEST_CASE("compound matrices") {
    std::mt19937_64 rng(9);
    const std::size_t d = 4;
    SquareMatrix<Rat> a(d), b(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            a(i, j) = oracle::random_rat(rng);
            b(i, j) = oracle::random_rat(rng);
        }
    CHECK(compound_matrix(a, 1) == a);
    CHECK(compound_matrix(a, 0) == SquareMatrix<Rat>::identity(1));
    CHECK(compound_matrix(a, d)(0, 0) == det_fraction_free(a));
    for (std::size_t l = 1; l <= d; ++l) {
        // Cauchy-Binet: C_l(AB) = C_l(A) C_l(B)
        CHECK(compound_matrix(oracle::matrix_product(a, b), l) ==
              oracle::matrix_product(compound_matrix(a, l), compound_matrix(b, l)));
        // Sylvester-Franke: det C_l(A) = det(A)^C(d-1, l-1)
        CHECK(det_fraction_free(compound_matrix(a, l)) ==
              pow(det_fraction_free(a), binomial(static_cast<long>(d) - 1, static_cast<long>(l) - 1).get_si()));
    }
}

TEST_CASE("interpolation round trip") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        const RatPoly p = oracle::random_poly(rng, 6);
        std::vector<Point> pts;
        for (long x = -3; x <= 5; ++x) pts.emplace_back(Rat(x, 2), p.eval(Rat(x, 2)));
        CHECK(poly_interpolate(pts) == p);
    }
    CHECK_THROWS_AS(poly_interpolate({{Rat(1), Rat(2)}, {Rat(1), Rat(3)}}), DuplicateAbscissa);
    CHECK(poly_interpolate({}).is_zero());
}

TEST_CASE("index enumerators") {
    unsigned count = 0;
    for_each_increasing(1, 6, 3, [&](const std::vector<long>& idx) {
        CHECK(idx[0] < idx[1]);
        CHECK(idx[1] < idx[2]);
        ++count;
    });
    CHECK(count == 20);
    count = 0;
    for_each_nondecreasing(1, 4, 3, [&](const std::vector<long>&) { ++count; });
    CHECK(count == 20);  // C(4 + 3 - 1, 3)
    count = 0;
    for_each_increasing(1, 3, 0, [&](const std::vector<long>& idx) {
        CHECK(idx.empty());
        ++count;
    });
    CHECK(count == 1);
    const unsigned partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (unsigned m = 0; m <= 10; ++m) {
        count = 0;
        for_each_partition_multiplicity(m, [&](const std::vector<unsigned>& mult) {
            unsigned total = 0;
            for (unsigned j = 0; j < mult.size(); ++j) total += (j + 1) * mult[j];
            CHECK(total == m);
            ++count;
        });
        CHECK(count == partitions[m]);
    }
}
