#include "qmzv/zeta.hpp"

#include "qmzv/interpolate.hpp"
#include "qmzv/matrix.hpp"
#include "qmzv/seqlib.hpp"
#include "qmzv/series.hpp"

namespace qmzv {

namespace {

Rat binom_rat(long top, long k) { return Rat(binomial(top, k)); }

// (1 - zeta^i)^{-s} for i = 1..n-1 (index 0 unused).
std::vector<CycloElem> inverse_powers(const CycloCtxPtr& ctx, unsigned s) {
    const unsigned n = ctx->n();
    std::vector<CycloElem> w(n);
    for (unsigned i = 1; i < n; ++i) {
        const CycloElem base = CycloElem(1) - CycloElem::zeta_power(ctx, i);
        w[i] = ring_pow(base.inverse(), s);
    }
    return w;
}

ZetaValue make_value(Rat v, ZetaMethod method, const ZetaParams& p) { return ZetaValue{std::move(v), method, p}; }

}  // namespace

std::string to_string(ZetaMethod method) {
    switch (method) {
        case ZetaMethod::brute: return "brute";
        case ZetaMethod::product: return "product";
        case ZetaMethod::stirling: return "stirling";
        case ZetaMethod::bell: return "bell";
        case ZetaMethod::det: return "det";
        case ZetaMethod::closed: return "closed";
    }
    return "unknown";
}

ZetaMethod parse_method(const std::string& text) {
    for (ZetaMethod m : {ZetaMethod::brute, ZetaMethod::product, ZetaMethod::stirling, ZetaMethod::bell,
                         ZetaMethod::det, ZetaMethod::closed})
        if (to_string(m) == text) return m;
    throw ParseError("unknown method: " + text);
}

ZetaValue zeta_brute(const ZetaParams& p, std::uint64_t budget) {
    p.validate();
    const mpz_class tuples = binomial(static_cast<long>(p.n) - 1, p.m);
    if (tuples > mpz_class(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("C(" + std::to_string(p.n - 1) + "," + std::to_string(p.m) + ") = " + tuples.get_str() +
                             " tuples exceeds budget " + std::to_string(budget));
    const auto ctx = CycloCtx::make(p.n);
    const auto w = inverse_powers(ctx, p.s);
    CycloElem acc(0);
    // Depth-first over increasing tuples, carrying the partial product.
    auto rec = [&](auto& self, unsigned depth, unsigned start, const CycloElem& partial) -> void {
        if (depth == p.m) {
            acc += partial;
            return;
        }
        for (unsigned i = start; i + (p.m - depth - 1) <= p.n - 1; ++i) self(self, depth + 1, i + 1, partial * w[i]);
    };
    rec(rec, 0, 1, CycloElem(1));
    return make_value(acc.as_rational(), ZetaMethod::brute, p);
}

std::vector<CycloElem> zeta_product_coefficients(unsigned n, unsigned s, unsigned m_max) {
    ZetaParams{n, 0, s}.validate();
    const auto ctx = CycloCtx::make(n);
    const auto w = inverse_powers(ctx, s);
    std::vector<CycloElem> c(m_max + 1, CycloElem(0));
    c[0] = CycloElem(1);
    for (unsigned j = 1; j < n; ++j)
        for (unsigned m = std::min(j, m_max); m >= 1; --m) c[m] += w[j] * c[m - 1];
    return c;
}

std::vector<ZetaValue> zeta_product(unsigned n, unsigned s, unsigned m_max) {
    const auto c = zeta_product_coefficients(n, s, m_max);
    std::vector<ZetaValue> out;
    out.reserve(c.size());
    for (unsigned m = 0; m <= m_max; ++m) out.push_back(make_value(c[m].as_rational(), ZetaMethod::product, {n, m, s}));
    return out;
}

Rat zeta_value(unsigned n, unsigned m, unsigned s) { return zeta_product(n, s, m).back().value; }

ZetaValue zeta_via_stirling(const ZetaParams& p) {
    p.validate();
    const auto ctx = CycloCtx::make(p.n);
    const CycloElem q = CycloElem::zeta(ctx);
    if (p.m + 1 > p.n) return make_value(Rat(0), ZetaMethod::stirling, p);
    const StirlingTable<CycloElem> table({1, p.s, StirlingKind::first}, q);
    const CycloElem fact = ring_pow(qfact(p.n - 1, q), p.s);
    if (fact.is_zero()) throw DivisionByZero("[n-1]_q! vanished at a primitive root of unity");
    const CycloElem denom = ring_pow(CycloElem(1) - q, p.s * p.m) * fact;
    const CycloElem v = exact_div(table.entry(p.n, p.m + 1), denom);
    return make_value(v.as_rational(), ZetaMethod::stirling, p);
}

namespace {
// Z(1, j s) for j = 1..count.
std::vector<Rat> single_row_values(unsigned n, unsigned s, unsigned count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (unsigned j = 1; j <= count; ++j) out.push_back(zeta_product(n, j * s, 1)[1].value);
    return out;
}
}  // namespace

ZetaValue zeta_bell(const ZetaParams& p) {
    p.validate();
    const auto rows = single_row_values(p.n, p.s, p.m);
    std::vector<Rat> xs(p.m);
    for (unsigned k = 1; k <= p.m; ++k) xs[k - 1] = sign_pow(k - 1) * factorial_rat(k - 1) * rows[k - 1];
    const Rat v = bell_complete<Rat>(p.m, xs) / factorial_rat(p.m);
    return make_value(v, ZetaMethod::bell, p);
}

ZetaValue zeta_det(const ZetaParams& p) {
    p.validate();
    const auto rows = single_row_values(p.n, p.s, p.m);
    SquareMatrix<Rat> mat(p.m);
    for (unsigned i = 0; i < p.m; ++i) {
        for (unsigned j = 0; j <= i; ++j) mat(i, j) = rows[i - j];
        if (i + 1 < p.m) mat(i, i + 1) = Rat(static_cast<long>(i + 1));
    }
    const Rat v = det_hessenberg(mat) / factorial_rat(p.m);
    return make_value(v, ZetaMethod::det, p);
}

Rat zeta_row_from_column(unsigned n, unsigned m, unsigned s) {
    ZetaParams{n, m, s}.validate();
    if (m < 1) throw BadParams("zeta_row_from_column needs m >= 1");
    const auto col = zeta_product(n, s, m);
    SquareMatrix<Rat> mat(m);
    for (unsigned i = 0; i < m; ++i) {
        mat(i, 0) = Rat(static_cast<long>(i + 1)) * col[i + 1].value;
        for (unsigned j = 1; j <= i; ++j) mat(i, j) = col[i - j + 1].value;
        if (i + 1 < m) mat(i, i + 1) = Rat(1);
    }
    return det_hessenberg(mat);
}

Rat zeta_1s_det(unsigned n, unsigned s) {
    if (n < 2 || s < 2) throw BadParams("zeta_1s_det needs n >= 2 and s >= 2");
    auto z1 = [&](unsigned j) { return zeta_m1_closed(n, j); };
    SquareMatrix<Rat> mat(s);
    for (unsigned i = 0; i < s; ++i) {
        mat(i, 0) = Rat(static_cast<long>(i + 1)) * z1(i + 1);
        for (unsigned j = 1; j <= i; ++j) mat(i, j) = z1(i - j + 1);
        if (i + 1 < s) mat(i, i + 1) = Rat(1);
    }
    return det_hessenberg(mat);
}

Rat zeta_m1_closed(unsigned n, unsigned m) {
    if (n < 1) throw BadParams("zeta_m1_closed needs n >= 1");
    return binom_rat(static_cast<long>(n) - 1, m) / Rat(static_cast<long>(m + 1));
}

Rat zeta_m2_closed(unsigned n, unsigned m) {
    if (m < 1 || n < 2) throw BadParams("zeta_m2_closed needs m >= 1 and n >= 2");
    const long top = static_cast<long>(n) - 1;
    const Rat inner = binom_rat(top, m) + sign_pow(m) * binom_rat(top, 2L * m + 1);
    return inner / Rat(static_cast<long>(n) * static_cast<long>(m + 1));
}

Rat zeta_m3_closed(unsigned n, unsigned m) {
    if (m < 1 || n < 2) throw BadParams("zeta_m3_closed needs m >= 1 and n >= 2");
    const long N = n;
    const long M = m;
    const Rat n2 = Rat(N * N);
    Rat out = (binom_rat(N - 1, M) + binom_rat(N - 1, 3 * M + 2)) / (n2 * Rat(M + 1));
    Rat correction(0);
    for (long k = 0; k <= (M + 1) / 2; ++k) {
        for (long i = 0; i <= M - 2 * k + 1; ++i) {
            Rat term = binom_rat(M - k + 1, k) / Rat(M - k + 1);
            term *= binom_rat(M - 2 * k + 1, i);
            term *= binom_rat(N + M - 2 * k - i, 3 * M - 3 * k + 2);
            term *= pow(Rat(2), i) * pow(Rat(-3), M - 2 * k - i + 1);
            correction += term;
        }
    }
    out -= correction / n2;
    return out;
}

RatPoly m2_rstirling_inner_poly(unsigned m) {
    std::vector<Rat> coeffs(m + 1);
    for (unsigned k = 0; k <= m; ++k) coeffs[k] = sign_pow(k) * rstirling1(2 * m + 2, m + k + 2, m + 1);
    return RatPoly(std::move(coeffs));
}

M2RStirlingForms zeta_m2_rstirling(unsigned n, unsigned m) {
    if (m < 1 || n < 2) throw BadParams("zeta_m2_rstirling needs m >= 1 and n >= 2");
    M2RStirlingForms out;
    const Rat x(static_cast<long>(n));
    const Rat prefactor = Rat(2) * factorial_rat(m) / factorial_rat(2 * m + 2) * binom_rat(static_cast<long>(n) - 1, m);
    out.rstirling_sum = prefactor * m2_rstirling_inner_poly(m).eval(x);

    Rat inner(0);
    for (unsigned k = 0; k <= m; ++k) {
        Rat recip(0);
        for_each_increasing(m + 1, 2 * m + 1, k + 1, [&](const std::vector<long>& idx) {
            Rat prod(1);
            for (long i : idx) prod *= Rat(i);
            recip += prod.inverse();
        });
        inner += pow(-x, k) * recip;
    }
    out.harmonic_sum = binom_rat(static_cast<long>(n), m + 1) / x * inner;
    return out;
}

Rat zeta_1s_dgber(unsigned n, unsigned s) {
    if (n < 2 || s < 1) throw BadParams("zeta_1s_dgber needs n >= 2 and s >= 1");
    const Rat lambda(1, static_cast<long>(n));
    Rat acc(0);
    for (unsigned j = 1; j <= s; ++j)
        acc += binom_rat(s - 1, j - 1) * degen_bernoulli(j, lambda) * pow(Rat(static_cast<long>(n)), j) / factorial_rat(j);
    return -acc;
}

ZetaValue zeta_closed(const ZetaParams& p) {
    p.validate();
    if (p.m == 0) return make_value(Rat(1), ZetaMethod::closed, p);
    switch (p.s) {
        case 1: return make_value(zeta_m1_closed(p.n, p.m), ZetaMethod::closed, p);
        case 2: return make_value(zeta_m2_closed(p.n, p.m), ZetaMethod::closed, p);
        case 3: return make_value(zeta_m3_closed(p.n, p.m), ZetaMethod::closed, p);
        default: break;
    }
    if (p.m == 1) return make_value(zeta_1s_dgber(p.n, p.s), ZetaMethod::closed, p);
    throw UnsupportedClosedForm("no closed form for m=" + std::to_string(p.m) + ", s=" + std::to_string(p.s));
}

ZetaValue zeta_by_method(const ZetaParams& p, ZetaMethod method, std::uint64_t budget) {
    switch (method) {
        case ZetaMethod::brute: return zeta_brute(p, budget);
        case ZetaMethod::product: p.validate(); return zeta_product(p.n, p.s, p.m).back();
        case ZetaMethod::stirling: return zeta_via_stirling(p);
        case ZetaMethod::bell: return zeta_bell(p);
        case ZetaMethod::det: return zeta_det(p);
        case ZetaMethod::closed: return zeta_closed(p);
    }
    throw BadParams("unknown method");
}

CycloElem btt_z_at_root(unsigned n, std::span<const unsigned> parts) {
    const auto ctx = CycloCtx::make(n);
    return btt_z(n, parts, CycloElem::zeta(ctx));
}

CheckReport btt26_check(unsigned n, unsigned j) {
    CheckReport report;
    const auto ctx = CycloCtx::make(n);
    const CycloElem zeta = CycloElem::zeta(ctx);
    const unsigned parts[] = {j};
    const CycloElem lhs = exact_div(btt_z(n, std::span<const unsigned>(parts), zeta),
                                    ring_pow(CycloElem(Rat(static_cast<long>(n))) * (CycloElem(1) - zeta), j));
    const Rat rhs = -degen_bernoulli(j, Rat(1, static_cast<long>(n))) / factorial_rat(j);
    report.record(lhs == CycloElem(rhs), "n=" + std::to_string(n) + " j=" + std::to_string(j) + ": lhs " +
                                             lhs.to_string() + " rhs " + rhs.to_string());
    return report;
}

CheckReport btt_decomposition_check(unsigned n, unsigned s) {
    CheckReport report;
    const auto ctx = CycloCtx::make(n);
    const CycloElem zeta = CycloElem::zeta(ctx);
    const CycloElem one_minus = CycloElem(1) - zeta;
    const CycloElem lhs = zeta_product_coefficients(n, s, 1)[1];
    CycloElem rhs(0);
    for (unsigned j = 1; j <= s; ++j) {
        const unsigned parts[] = {j};
        rhs += CycloElem(binom_rat(s - 1, j - 1)) *
               exact_div(btt_z(n, std::span<const unsigned>(parts), zeta), ring_pow(one_minus, j));
    }
    report.record(lhs == rhs, "n=" + std::to_string(n) + " s=" + std::to_string(s) + ": lhs " + lhs.to_string() +
                                  " rhs " + rhs.to_string());
    return report;
}

BiPoly f_poly(unsigned s, unsigned l) {
    if (s < 1 || l > s) throw BadParams("f_poly needs s >= 1 and 0 <= l <= s");
    const RatPoly X = RatPoly::variable();
    // Monic polynomial with roots alpha: sum_j (-1)^j e_j T^{s-j}, e_j = C(s,j) + delta_{j,s} X.
    std::vector<RatPoly> monic(s + 1);
    for (unsigned j = 0; j <= s; ++j) {
        RatPoly e(binom_rat(s, j));
        if (j == s) e = e + X;
        monic[s - j] = RatPoly(sign_pow(j)) * e;
    }
    SquareMatrix<RatPoly> companion(s);
    for (unsigned i = 1; i < s; ++i) companion(i, i - 1) = RatPoly(1);
    for (unsigned i = 0; i < s; ++i) companion(i, s - 1) = -monic[i];

    const SquareMatrix<RatPoly> k = compound_matrix(companion, l);
    SquareMatrix<BiPoly> m(k.dim());
    for (std::size_t i = 0; i < k.dim(); ++i)
        for (std::size_t j = 0; j < k.dim(); ++j) m(i, j) = BiPoly{RatPoly(i == j ? 1 : 0), -k(i, j)};
    return det_fraction_free(m);
}

CheckReport logf_identity_check(unsigned s, unsigned N) {
    if (s < 1) throw BadParams("logf check needs s >= 1");
    CheckReport report;
    const std::size_t order = N + 1;
    TruncSeries<RatPoly> total(order);
    for (unsigned l = 0; l <= s; ++l) {
        const auto lg = TruncSeries<RatPoly>(f_poly(s, l), order).log();
        total = (l % 2 == 0) ? total + lg : total - lg;
    }
    const RatPoly sign(sign_pow(static_cast<long>(s) - 1));
    for (unsigned n = 1; n <= N; ++n) {
        const RatPoly coeff = sign * total[n];
        const bool x0_vanishes = coeff.coeff(0).is_zero();
        report.record(x0_vanishes, "X^0 coefficient of Y^" + std::to_string(n) + " is " + coeff.coeff(0).to_string());
        if (!x0_vanishes) continue;
        const auto& c = coeff.coeffs();
        const std::size_t deg = c.size();
        const unsigned m_top = std::max<unsigned>(n, static_cast<unsigned>(deg));
        std::vector<Rat> expected(m_top, Rat(0));
        if (n == 1) {
            expected[0] = Rat(1);
        } else {
            const auto vals = zeta_product(n, s, n - 1);
            for (unsigned m = 0; m < n; ++m) expected[m] = pow(Rat(static_cast<long>(n)), s - 1) * vals[m].value;
        }
        for (unsigned m = 0; m < m_top; ++m) {
            const Rat actual = m + 1 < deg ? c[m + 1] : Rat(0);
            report.record(actual == expected[m], "coefficient X^" + std::to_string(m) + " Y^" + std::to_string(n) +
                                                     ": expected " + expected[m].to_string() + " got " +
                                                     actual.to_string());
        }
    }
    return report;
}

RatPoly zeta_poly_in_n(unsigned m, unsigned s, unsigned degree_cap) {
    if (s < 1) throw BadParams("zeta_poly_in_n needs s >= 1");
    const unsigned degree = m * s;
    if (degree > degree_cap)
        throw BadParams("degree m*s = " + std::to_string(degree) + " exceeds cap " + std::to_string(degree_cap));
    const unsigned start = std::max(m + 1, 2U);
    std::vector<Point> fit;
    for (unsigned k = 0; k <= degree; ++k) {
        const unsigned n = start + k;
        fit.emplace_back(Rat(static_cast<long>(n)), zeta_value(n, m, s));
    }
    RatPoly poly = poly_interpolate(fit);
    for (unsigned k = 1; k <= 2; ++k) {
        const unsigned n = start + degree + k;
        const Rat x(static_cast<long>(n));
        const Rat expected = zeta_value(n, m, s);
        if (poly.eval(x) != expected)
            throw DegreeMismatch("sample n=" + std::to_string(n) + " is off the degree-" + std::to_string(degree) +
                                 " interpolant for m=" + std::to_string(m) + ", s=" + std::to_string(s));
    }
    return poly;
}

}  // namespace qmzv
