// Acceptance gate: one line per criterion, all comparisons exact.
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "qmzv/fixtures.hpp"
#include "qmzv/interpolate.hpp"
#include "qmzv/qstirling.hpp"
#include "qmzv/seqlib.hpp"
#include "qmzv/verify.hpp"
#include "qmzv/zeta.hpp"

using namespace qmzv;

namespace {

struct Outcome {
    bool pass = true;
    unsigned checks = 0;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void absorb(const VerifyReport& r) {
        checks += r.cases;
        if (!r.pass() && pass) {
            pass = false;
            const auto& f = r.failures.front();
            detail = r.suite + ":";
            for (const auto& [k, v] : f.params) detail += " " + k + "=" + v;
            detail += " expected " + f.expected + " got " + f.actual;
        }
    }
};

unsigned jobs = 1;

VerifyReport suite(const std::string& name, std::optional<unsigned> n_max, std::optional<unsigned> m_max,
                   std::optional<unsigned> s_max, std::optional<unsigned> trunc = std::nullopt) {
    VerifyConfig cfg;
    cfg.n_max = n_max;
    cfg.m_max = m_max;
    cfg.s_max = s_max;
    cfg.trunc = trunc;
    cfg.jobs = jobs;
    return run_suite(name, cfg);
}

std::string str(unsigned v) { return std::to_string(v); }

Outcome criterion1() {
    Outcome o;
    for (unsigned n = 2; n <= 25; ++n) {
        const auto row = zeta_product(n, 1, n - 1);
        for (unsigned m = 0; m < n; ++m) {
            const Rat expected = Rat(binomial(n - 1, m)) / Rat(static_cast<long>(m) + 1);
            o.expect(row[m].value == expected, "product n=" + str(n) + " m=" + str(m));
            if (n <= 12) o.expect(zeta_brute({n, m, 1}).value == expected, "brute n=" + str(n) + " m=" + str(m));
        }
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    o.absorb(suite("s2", 25, 12, std::nullopt));
    return o;
}

Outcome criterion3() {
    Outcome o;
    o.absorb(suite("s3", 18, 6, std::nullopt));
    return o;
}

const DisplayedPolynomial& fixture(const std::string& label) {
    static const auto all = displayed_polynomials();
    for (const auto& d : all)
        if (d.label == label) return d;
    throw std::runtime_error("missing fixture " + label);
}

Outcome criterion4() {
    Outcome o;
    for (unsigned s = 2; s <= 9; ++s) {
        const auto& d = fixture("Z(1," + str(s) + ")");
        o.expect(zeta_poly_in_n(1, s) == d.poly, "polynomial " + d.label);
    }
    const auto listed = displayed_constant_terms();
    for (unsigned s = 1; s <= listed.size(); ++s) {
        const Rat via_norlund = sign_pow(static_cast<long>(s) - 1) * norlund(s) / factorial_rat(s);
        o.expect(via_norlund == listed[s - 1], "constant term via Norlund s=" + str(s));
        o.expect(zeta_poly_in_n(1, s).eval(Rat(0)) == listed[s - 1], "constant term of interpolant s=" + str(s));
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    o.expect(zeta_poly_in_n(1, 4) == fixture("Z(1,4) s=4").poly, "Z(1,4)");
    o.expect(zeta_poly_in_n(2, 4) == fixture("Z(2,4)").poly, "Z(2,4)");
    return o;
}

Outcome criterion6() {
    Outcome o;
    o.absorb(suite("dgber", 20, std::nullopt, 8));
    o.absorb(suite("btt26", 20, std::nullopt, 6));
    return o;
}

Outcome criterion7() {
    Outcome o;
    o.absorb(suite("routes", 14, 8, 3));
    return o;
}

Outcome criterion8() {
    Outcome o;
    o.absorb(suite("orthogonality", 10, std::nullopt, 3));
    return o;
}

Outcome criterion9() {
    Outcome o;
    o.absorb(suite("gtrudi", std::nullopt, 8, std::nullopt));
    return o;
}

Outcome criterion10() {
    Outcome o;
    o.absorb(suite("logf", std::nullopt, std::nullopt, 3, 12));
    return o;
}

Outcome criterion11() {
    Outcome o;
    const RatPoly q = RatPoly::variable();
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned s = 1; s <= 3; ++s) {
            StirlingTable<RatPoly> t1({r, s, StirlingKind::first}, q);
            StirlingTable<RatPoly> t2({r, s, StirlingKind::second}, q);
            for (unsigned n = r; n <= 10; ++n) {
                const std::string at = " r=" + str(r) + " s=" + str(s) + " n=" + str(n);
                for (unsigned k = r; k + 1 <= n; ++k)
                    o.expect(stirling1_reciprocal_form(n, k, r, s, q) == t1.entry(n, k), "reciprocal" + at);
                for (unsigned m = 0; n - m >= r; ++m) {
                    const auto e1 = t1.entry(n, n - m);
                    o.expect(stirling1_elementary_form(n, m, r, s, q) == e1, "elementary" + at);
                    o.expect(stirling1_monotone_form(n, m, r, s, q) == e1, "monotone" + at);
                    o.expect(stirling1_nested_form(n, m, r, s, q) == e1, "nested" + at);
                    o.expect(stirling2_monotone_form(n, m, r, s, q) == t2.entry(n, n - m), "second monotone" + at);
                }
                for (unsigned k = r; k <= n; ++k)
                    o.expect(stirling2_nested_form(n, k, r, s, q) == t2.entry(n, k), "second nested" + at);
            }
        }
    return o;
}

Outcome criterion12() {
    Outcome o;
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    auto rnd = [&] { return Rat(num(rng), den(rng)); };

    for (unsigned n = 1; n <= 40; ++n) {
        RatPoly prod(1);
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        o.expect(prod == RatPoly::monomial(n, Rat(1)) - RatPoly(1), "cyclotomic product n=" + str(n));
    }
    for (unsigned n = 2; n <= 40; ++n) {
        const auto ctx = CycloCtx::make(n);
        o.expect(product_one_minus_powers(ctx) == Rat(static_cast<long>(n)), "prod (1 - zeta^j) n=" + str(n));
        for (int t = 0; t < 3; ++t) {
            std::vector<Rat> c(ctx->degree());
            for (auto& x : c) x = rnd();
            const CycloElem a(ctx, c);
            if (a.is_zero()) continue;
            o.expect(a * a.inverse() == CycloElem(1), "inverse round trip n=" + str(n));
        }
    }
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> xs(10);
        for (auto& x : xs) x = rnd();
        for (unsigned n = 0; n <= 10; ++n)
            o.expect(bell_complete<Rat>(n, xs) == bell_complete_partition_sum<Rat>(n, xs), "Bell n=" + str(n));
    }
    for (std::size_t d = 0; d <= 8; ++d)
        for (int t = 0; t < 10; ++t) {
            SquareMatrix<Rat> m(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j <= i + 1 && j < d; ++j) m(i, j) = rnd();
            o.expect(det_hessenberg(m) == det_fraction_free(m), "Hessenberg d=" + std::to_string(d));
        }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"s = 1 values equal C(n-1,m)/(m+1), n <= 25, brute force n <= 12", criterion1},
        {"s = 2 closed form and both r-Stirling variants, n <= 25, m <= 12; m = 1..4 polynomials", criterion2},
        {"s = 3 closed form, n <= 18, m <= 6; m = 1..4 polynomials", criterion3},
        {"Z(1,s) polynomials for s = 2..9 and their constant terms", criterion4},
        {"Z(1,4) and Z(2,4) polynomials", criterion5},
        {"degenerate Bernoulli route, harmonic q-series identity and decomposition, n <= 20", criterion6},
        {"Bell, determinant and row-from-column routes agree, n <= 14, m <= 8, s <= 3", criterion7},
        {"q-Stirling orthogonality, n <= 10, r, s <= 3, q symbolic, 1 and zeta_7", criterion8},
        {"five Trudi expressions agree on 50 random sequences", criterion9},
        {"log F generating function identity, s <= 3, N = 12", criterion10},
        {"q-Stirling closed forms equal the recurrences, n <= 10, r, s <= 3, q symbolic", criterion11},
        {"cyclotomic, Bell and determinant infrastructure properties", criterion12},
    };

    unsigned failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("error: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ["
                  << o.checks << " checks, " << ms.count() << " ms]";
        if (!o.pass) std::cout << "  first failure: " << o.detail;
        std::cout << std::endl;
        failed += !o.pass;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
