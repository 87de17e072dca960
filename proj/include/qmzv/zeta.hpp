#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmzv/cyclo.hpp"
#include "qmzv/poly.hpp"
#include "qmzv/qstirling.hpp"

namespace qmzv {

// Z_n(q; m, s) = sum_{1<=i_1<...<i_m<=n-1} prod_j (1 - q^{i_j})^{-s}, evaluated
// at q = zeta_n. All routes below return exact rationals.
struct ZetaParams {
    unsigned n = 2;
    unsigned m = 1;
    unsigned s = 1;

    void validate() const {
        if (n < 2) throw BadParams("zeta needs n >= 2");
        if (s < 1) throw BadParams("zeta needs s >= 1");
    }
};

enum class ZetaMethod { brute, product, stirling, bell, det, closed };

std::string to_string(ZetaMethod method);
ZetaMethod parse_method(const std::string& text);

struct ZetaValue {
    Rat value;
    ZetaMethod method = ZetaMethod::product;
    ZetaParams params;
};

inline constexpr std::uint64_t default_brute_budget = 2'000'000;

// Direct sum over all C(n-1, m) index tuples in Q(zeta_n).
ZetaValue zeta_brute(const ZetaParams& p, std::uint64_t budget = default_brute_budget);

// Coefficients of X^0..X^{m_max} of prod_{j=1}^{n-1} (1 + X (1 - zeta^j)^{-s}),
// before and after rationalization.
std::vector<CycloElem> zeta_product_coefficients(unsigned n, unsigned s, unsigned m_max);
std::vector<ZetaValue> zeta_product(unsigned n, unsigned s, unsigned m_max);
Rat zeta_value(unsigned n, unsigned m, unsigned s);

// From the first-kind q-Stirling table with r = 1 at q = zeta_n:
// [n, m+1] / ((1-q)^{sm} ([n-1]_q!)^s).
ZetaValue zeta_via_stirling(const ZetaParams& p);

// (1/m!) Y_m(Z(1,s), -1! Z(1,2s), 2! Z(1,3s), ...).
ZetaValue zeta_bell(const ZetaParams& p);

// (1/m!) det of the Hessenberg matrix built from Z(1,s), ..., Z(1,ms).
ZetaValue zeta_det(const ZetaParams& p);

// Z(1, ms) from the determinant whose first column is j Z(j, s).
Rat zeta_row_from_column(unsigned n, unsigned m, unsigned s);

// Z(1, s) from the s x s determinant with entries C(n-1, j)/(j+1), s >= 2.
Rat zeta_1s_det(unsigned n, unsigned s);

// Closed forms.
Rat zeta_m1_closed(unsigned n, unsigned m);
Rat zeta_m2_closed(unsigned n, unsigned m);
Rat zeta_m3_closed(unsigned n, unsigned m);

struct M2RStirlingForms {
    Rat rstirling_sum;  // via r-Stirling numbers [2m+2, m+k+2]^{(m+1,1)}
    Rat harmonic_sum;   // via reciprocal products over m+1 <= i_1 < ... <= 2m+1
};
M2RStirlingForms zeta_m2_rstirling(unsigned n, unsigned m);
// sum_{k=0}^m [2m+2, m+k+2]^{(m+1,1)} (-x)^k as a polynomial in x.
RatPoly m2_rstirling_inner_poly(unsigned m);

// -sum_{j=1}^s C(s-1, j-1) beta_j(1/n) n^j / j!.
Rat zeta_1s_dgber(unsigned n, unsigned s);

// Dispatches to the closed form that covers (m, s); throws UnsupportedClosedForm.
ZetaValue zeta_closed(const ZetaParams& p);

// Evaluate by the named route.
ZetaValue zeta_by_method(const ZetaParams& p, ZetaMethod method, std::uint64_t budget = default_brute_budget);

// ---- finite multiple harmonic q-series -----------------------------------

// z_n(q; s_1..s_m) = sum_{n-1>=i_1>...>i_m>=1} prod_j q^{(s_j-1) i_j} / [i_j]_q^{s_j}
// over a field R (Rat or CycloElem).
template <Ring R>
R btt_z(unsigned n, std::span<const unsigned> parts, const R& q) {
    if (parts.empty()) throw BadParams("composition must be nonempty");
    if (n < 2) throw BadParams("btt_z needs n >= 2");
    std::vector<R> qpow(n), qinv(n);
    R power(1), num(0);
    for (unsigned i = 0; i < n; ++i) {
        qpow[i] = power;
        if (i > 0) qinv[i] = exact_div(R(1), num);
        num = num + power;
        power = power * q;
    }
    R acc(0);
    const unsigned m = static_cast<unsigned>(parts.size());
    for_each_increasing(1, static_cast<long>(n) - 1, m, [&](const std::vector<long>& idx) {
        R term(1);
        // idx is increasing; the first part pairs with the largest index.
        for (unsigned j = 0; j < m; ++j) {
            const auto i = static_cast<std::size_t>(idx[m - 1 - j]);
            term = term * ring_pow(qpow[i], parts[j] - 1) * ring_pow(qinv[i], parts[j]);
        }
        acc = acc + term;
    });
    return acc;
}

CycloElem btt_z_at_root(unsigned n, std::span<const unsigned> parts);

struct CheckReport {
    bool pass = true;
    unsigned cases = 0;
    std::optional<std::string> first_failure;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (!ok && pass) {
            pass = false;
            first_failure = what;
        }
    }
};

// z_n(zeta; j) / (n (1 - zeta))^j == -beta_j(1/n) / j!, compared in Q(zeta_n).
CheckReport btt26_check(unsigned n, unsigned j);

// Z_n(zeta; 1, s) == sum_j C(s-1, j-1) z_n(zeta; j) / (1 - zeta)^j in Q(zeta_n).
CheckReport btt_decomposition_check(unsigned n, unsigned s);

// ---- generating function -------------------------------------------------

// F_{s,l}(X, Y) = prod over l-subsets (1 - alpha_{i_1}...alpha_{i_l} Y), with
// alpha the roots of (1 - Y)^s + X, as det(I - Y C_l) where C_l is the l-th
// compound of the companion matrix. F_{s,0} = 1 - Y.
BiPoly f_poly(unsigned s, unsigned l);

// Expands ((-1)^{s-1}/X) log prod_l F_{s,l}^{(-1)^l} in Y up to Y^N and compares
// the coefficient of X^m Y^n with n^{s-1} Z_n(zeta_n; m, s).
CheckReport logf_identity_check(unsigned s, unsigned N);

// Interpolates n -> Z_n(zeta_n; m, s) from ms+1 samples starting at n = m+1 and
// confirms two further samples; throws DegreeMismatch otherwise.
RatPoly zeta_poly_in_n(unsigned m, unsigned s, unsigned degree_cap = 16);

}  // namespace qmzv
