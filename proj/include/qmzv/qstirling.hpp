#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmzv/combinatorics.hpp"
#include "qmzv/cyclo.hpp"
#include "qmzv/poly.hpp"

namespace qmzv {

// Evaluation point for q: an indeterminate, a rational number, or zeta_n.
struct SymbolicQ {};
struct RationalQ {
    Rat value;
};
struct RootOfUnityQ {
    CycloCtxPtr ctx;
};
using QPoint = std::variant<SymbolicQ, RationalQ, RootOfUnityQ>;

// Accepts "symbolic", a rational literal, or "zeta:<n>".
QPoint parse_qpoint(const std::string& text);
std::string describe(const QPoint& q);

// Calls f with the ring value of q: RatPoly x, Rat, or CycloElem zeta_n.
template <class F>
decltype(auto) with_q(const QPoint& q, F&& f) {
    return std::visit(
        [&](const auto& p) -> decltype(auto) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SymbolicQ>) return f(RatPoly::variable());
            else if constexpr (std::is_same_v<P, RationalQ>) return f(p.value);
            else return f(CycloElem::zeta(p.ctx));
        },
        q);
}

// [i]_q = 1 + q + ... + q^{i-1}; defined at q = 1 as well.
template <Ring R>
R qnum(unsigned i, const R& q) {
    R acc(0);
    R power(1);
    for (unsigned j = 0; j < i; ++j) {
        acc = acc + power;
        power = power * q;
    }
    return acc;
}

// [i]_q! with [0]_q! = 1.
template <Ring R>
R qfact(unsigned i, const R& q) {
    R acc(1);
    for (unsigned j = 2; j <= i; ++j) acc = acc * qnum(j, q);
    return acc;
}

enum class StirlingKind { first, second };

struct StirlingParams {
    unsigned r = 1;
    unsigned s = 1;
    StirlingKind kind = StirlingKind::first;

    void validate() const {
        if (r < 1 || s < 1) throw BadParams("Stirling parameters need r >= 1 and s >= 1");
    }
};

// x^r prod_{i=r}^{n-1} (x - [i]_q^s), a polynomial in x over R.
template <Ring R>
UniPoly<R> falling_product(unsigned n, unsigned r, unsigned s, const R& q) {
    if (r < 1 || s < 1) throw BadParams("falling product needs r >= 1 and s >= 1");
    if (n < r) throw BadParams("falling product needs n >= r");
    UniPoly<R> out = UniPoly<R>::monomial(r, R(1));
    for (unsigned i = r; i < n; ++i) out = out * UniPoly<R>{-ring_pow(qnum(i, q), s), R(1)};
    return out;
}

// Basis polynomial of index n: x^n below r, the falling product from r on.
template <Ring R>
UniPoly<R> stirling_basis(unsigned n, unsigned r, unsigned s, const R& q) {
    if (n < r) return UniPoly<R>::monomial(n, R(1));
    return falling_product(n, r, s, q);
}

// Memoized triangle of q-(r,s)-Stirling numbers built from the recurrences
//   first kind:  T(n,k) = T(n-1,k-1) + [n-1]_q^s T(n-1,k)
//   second kind: T(n,k) = T(n-1,k-1) + [k]_q^s   T(n-1,k)
// with T(0,0) = 1. Rows below r (first kind) and columns below r (second
// kind) carry weight 0, so T(n,k) = delta_{n,k} for n <= r and T(n,k) = 0 for
// k < r <= n; the entries for n >= r are the coefficients of the falling
// product expansions. Growth is serialized by an internal mutex.
template <Ring R>
class StirlingTable {
public:
    StirlingTable(StirlingParams params, R q) : params_(params), q_(std::move(q)) {
        params_.validate();
        rows_.push_back({R(1)});
    }

    const StirlingParams& params() const noexcept { return params_; }
    const R& q() const noexcept { return q_; }

    R entry(unsigned n, unsigned k) const {
        if (k > n) return R(0);
        std::lock_guard lock(mu_);
        grow(n);
        return rows_[n][k];
    }

    std::vector<R> row(unsigned n) const {
        std::lock_guard lock(mu_);
        grow(n);
        return rows_[n];
    }

private:
    R power_weight(unsigned i) const {
        if (i < params_.r) return R(0);
        while (weights_.size() <= i) weights_.push_back(ring_pow(qnum(static_cast<unsigned>(weights_.size()), q_), params_.s));
        return weights_[i];
    }

    void grow(unsigned n) const {
        while (rows_.size() <= n) {
            const unsigned m = static_cast<unsigned>(rows_.size());
            const auto& prev = rows_.back();
            std::vector<R> cur(m + 1, R(0));
            const R w_row = params_.kind == StirlingKind::first ? power_weight(m - 1) : R(0);
            for (unsigned k = 0; k <= m; ++k) {
                R v = k >= 1 ? prev[k - 1] : R(0);
                if (k < m) {
                    const R w = params_.kind == StirlingKind::first ? w_row : power_weight(k);
                    if (!is_zero(w)) v = v + w * prev[k];
                }
                cur[k] = std::move(v);
            }
            rows_.push_back(std::move(cur));
        }
    }

    StirlingParams params_;
    R q_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<R>> rows_;
    mutable std::vector<R> weights_;
};

template <Ring R>
R stirling1(unsigned n, unsigned k, unsigned r, unsigned s, const R& q) {
    return StirlingTable<R>({r, s, StirlingKind::first}, q).entry(n, k);
}

template <Ring R>
R stirling2(unsigned n, unsigned k, unsigned r, unsigned s, const R& q) {
    return StirlingTable<R>({r, s, StirlingKind::second}, q).entry(n, k);
}

// ---- closed forms, used to cross-check the recurrences -------------------

// First kind, r <= k <= n-1:
//   ([n-1]_q!/[r-1]_q!)^s * sum_{r<=i_1<...<i_{k-r}<=n-1} 1/([i_1]...[i_{k-r}])^s.
// Each summand is formed with exact_div, so this works over polynomial rings.
template <Ring R>
R stirling1_reciprocal_form(unsigned n, unsigned k, unsigned r, unsigned s, const R& q) {
    if (r < 1 || s < 1 || k < r || k + 1 > n) throw BadParams("reciprocal form needs r <= k <= n-1");
    const R prefactor = exact_div(ring_pow(qfact(n - 1, q), s), ring_pow(qfact(r - 1, q), s));
    std::vector<R> qn(n);
    for (unsigned i = 0; i < n; ++i) qn[i] = ring_pow(qnum(i, q), s);
    R acc(0);
    for_each_increasing(r, static_cast<long>(n) - 1, k - r, [&](const std::vector<long>& idx) {
        R denom(1);
        for (long i : idx) denom = denom * qn[static_cast<std::size_t>(i)];
        acc = acc + exact_div(prefactor, denom);
    });
    return acc;
}

// First kind at (n, n-m), n-m >= r: sum_{r<=i_1<...<i_m<=n-1} ([i_1]...[i_m])^s.
template <Ring R>
R stirling1_elementary_form(unsigned n, unsigned m, unsigned r, unsigned s, const R& q) {
    if (r < 1 || s < 1 || m > n || n - m < r) throw BadParams("elementary form needs n-m >= r");
    R acc(0);
    for_each_increasing(r, static_cast<long>(n) - 1, m, [&](const std::vector<long>& idx) {
        R term(1);
        for (long i : idx) term = term * ring_pow(qnum(static_cast<unsigned>(i), q), s);
        acc = acc + term;
    });
    return acc;
}

// First kind at (n, n-m): sum_{r<=i_1<=...<=i_m<=n-m} ([i_1][i_2+1]...[i_m+m-1])^s.
template <Ring R>
R stirling1_monotone_form(unsigned n, unsigned m, unsigned r, unsigned s, const R& q) {
    if (r < 1 || s < 1 || m > n || n - m < r) throw BadParams("monotone form needs n-m >= r");
    R acc(0);
    for_each_nondecreasing(r, static_cast<long>(n - m), m, [&](const std::vector<long>& idx) {
        R term(1);
        for (std::size_t j = 0; j < idx.size(); ++j)
            term = term * ring_pow(qnum(static_cast<unsigned>(idx[j] + static_cast<long>(j)), q), s);
        acc = acc + term;
    });
    return acc;
}

// First kind at (n, n-m) as the nested sum
//   sum_{i_m=r}^{n-m} [i_m+m-1]^s sum_{i_{m-1}=r}^{i_m} [i_{m-1}+m-2]^s ... sum_{i_1=r}^{i_2} [i_1]^s.
template <Ring R>
R stirling1_nested_form(unsigned n, unsigned m, unsigned r, unsigned s, const R& q) {
    if (r < 1 || s < 1 || m > n || n - m < r) throw BadParams("nested form needs n-m >= r");
    auto level = [&](auto& self, unsigned j, unsigned upper) -> R {
        if (j == 0) return R(1);
        R acc(0);
        for (unsigned i = r; i <= upper; ++i) acc = acc + ring_pow(qnum(i + j - 1, q), s) * self(self, j - 1, i);
        return acc;
    };
    return level(level, m, n - m);
}

// Second kind, r <= k <= n, as the iterated sum over 0 <= i_1 <= ... <= i_{k-r} <= n-k
// with weights [r+j]^{(i_{j+1}-i_j)s} and [r]^{i_1 s}.
template <Ring R>
R stirling2_nested_form(unsigned n, unsigned k, unsigned r, unsigned s, const R& q) {
    if (r < 1 || s < 1 || k < r || k > n) throw BadParams("nested form needs r <= k <= n");
    std::vector<R> base(k + 1);
    for (unsigned i = r; i <= k; ++i) base[i] = ring_pow(qnum(i, q), s);
    auto level = [&](auto& self, unsigned j, unsigned upper) -> R {
        if (j == 0) return ring_pow(base[r], upper);
        R acc(0);
        for (unsigned i = 0; i <= upper; ++i) acc = acc + ring_pow(base[r + j], upper - i) * self(self, j - 1, i);
        return acc;
    };
    return level(level, k - r, n - k);
}

// Second kind at (n, n-k), n-k >= r: sum_{r<=i_1<=...<=i_k<=n-k} ([i_1]...[i_k])^s.
template <Ring R>
R stirling2_monotone_form(unsigned n, unsigned k, unsigned r, unsigned s, const R& q) {
    if (r < 1 || s < 1 || k > n || n - k < r) throw BadParams("monotone form needs n-k >= r");
    R acc(0);
    for_each_nondecreasing(r, static_cast<long>(n - k), k, [&](const std::vector<long>& idx) {
        R term(1);
        for (long i : idx) term = term * ring_pow(qnum(static_cast<unsigned>(i), q), s);
        acc = acc + term;
    });
    return acc;
}

// ---- orthogonality ------------------------------------------------------

struct OrthogonalityReport {
    bool pass = true;
    unsigned cases = 0;
    // First failure: identity (1 or 2), indices and the offending sum.
    std::optional<std::string> counterexample;
};

// Checks sum_k (-1)^{n-k} [n,k][k,m] = delta and sum_k (-1)^{k-m} {n,k}[k,m] = delta
// for all n, m <= n_max.
template <Ring R>
OrthogonalityReport orthogonality_check(unsigned n_max, unsigned r, unsigned s, const R& q) {
    StirlingTable<R> first({r, s, StirlingKind::first}, q);
    StirlingTable<R> second({r, s, StirlingKind::second}, q);
    OrthogonalityReport report;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned m = 0; m <= n_max; ++m) {
            R sum1(0), sum2(0);
            for (unsigned k = 0; k <= std::max(n, m); ++k) {
                const R t1 = first.entry(n, k) * second.entry(k, m);
                sum1 = ((n - k) % 2 == 0) ? sum1 + t1 : sum1 - t1;
                const R t2 = second.entry(n, k) * first.entry(k, m);
                sum2 = ((k + m) % 2 == 0) ? sum2 + t2 : sum2 - t2;
            }
            const R delta(n == m ? 1 : 0);
            report.cases += 2;
            if (report.pass && !(sum1 == delta)) {
                report.pass = false;
                report.counterexample = "identity 1 at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                        ": " + to_string(sum1);
            }
            if (report.pass && !(sum2 == delta)) {
                report.pass = false;
                report.counterexample = "identity 2 at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                        ": " + to_string(sum2);
            }
        }
    }
    return report;
}

// Broder's r-Stirling numbers of the first kind (s = 1, q = 1).
Rat rstirling1(unsigned n, unsigned k, unsigned r);

}  // namespace qmzv
