#pragma once

#include <span>
#include <vector>

#include "qmzv/combinatorics.hpp"
#include "qmzv/matrix.hpp"
#include "qmzv/poly.hpp"
#include "qmzv/series.hpp"

namespace qmzv {

inline Rat factorial_rat(unsigned n) { return Rat(factorial(n)); }

// Complete exponential Bell polynomial Y_n(x_1..x_n); xs[0] holds x_1.
// Uses Y_{k+1} = sum_{j=0}^{k} C(k,j) Y_{k-j} x_{j+1}, Y_0 = 1.
template <Ring R>
R bell_complete(unsigned n, std::span<const R> xs) {
    if (xs.size() < n) throw InsufficientInput("Bell polynomial Y_n needs n arguments");
    std::vector<R> y(n + 1, R(0));
    y[0] = R(1);
    for (unsigned k = 0; k < n; ++k) {
        R acc(0);
        for (unsigned j = 0; j <= k; ++j) acc = acc + R(Rat(binomial(k, j))) * y[k - j] * xs[j];
        y[k + 1] = acc;
    }
    return y[n];
}

// Same polynomial from its defining sum over partitions of n:
// sum n!/(i_1! i_2! ...) prod_j (x_j/j!)^{i_j}.
template <Ring R>
R bell_complete_partition_sum(unsigned n, std::span<const R> xs) {
    if (xs.size() < n) throw InsufficientInput("Bell polynomial Y_n needs n arguments");
    R acc(0);
    for_each_partition_multiplicity(n, [&](const std::vector<unsigned>& mult) {
        Rat coef = factorial_rat(n);
        R term(1);
        for (unsigned j = 1; j <= mult.size(); ++j) {
            const unsigned i = mult[j - 1];
            if (i == 0) continue;
            coef /= factorial_rat(i) * pow(factorial_rat(j), i);
            term = term * ring_pow(xs[j - 1], i);
        }
        acc = acc + R(coef) * term;
    });
    return acc;
}

// e_K of the underlying values from their power sums g_1..g_K:
// (1/K!) Y_K(g_1, -1! g_2, 2! g_3, -3! g_4, ...).
template <Ring R>
R elem_from_power_sums(std::span<const R> g, unsigned K) {
    if (g.size() < K) throw InsufficientInput("need at least K power sums");
    std::vector<R> xs(K);
    for (unsigned j = 1; j <= K; ++j) xs[j - 1] = R(sign_pow(j - 1) * factorial_rat(j - 1)) * g[j - 1];
    return R(Rat(1) / factorial_rat(K)) * bell_complete<R>(K, xs);
}

// Sequences a_1, a_2, ... and b_1, b_2, ... (a_0 = b_0 = 1 implicit) related by
// m b_m = sum_{i=1}^m (-1)^{i-1} a_i b_{m-i}. Index 0 of each span holds the
// first term.
template <Ring R>
struct GtrudiForward {
    R partition_sum;
    R determinant;
    R recurrence;
};

template <Ring R>
struct GtrudiInverse {
    R determinant;
    R recurrence;
};

// b_1..b_count from a by the recurrence.
template <Ring R>
std::vector<R> gtrudi_b_sequence(std::span<const R> a, unsigned count) {
    if (a.size() < count) throw InsufficientInput("sequence a is too short");
    std::vector<R> b(count + 1, R(0));
    b[0] = R(1);
    for (unsigned m = 1; m <= count; ++m) {
        R acc(0);
        for (unsigned i = 1; i <= m; ++i) {
            const R t = a[i - 1] * b[m - i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        b[m] = R(Rat(1, m)) * acc;
    }
    b.erase(b.begin());
    return b;
}

// a_1..a_count from b by a_n = sum_{j=1}^{n-1} (-1)^{j-1} b_j a_{n-j} + (-1)^{n+1} n b_n.
template <Ring R>
std::vector<R> gtrudi_a_sequence(std::span<const R> b, unsigned count) {
    if (b.size() < count) throw InsufficientInput("sequence b is too short");
    std::vector<R> a(count + 1, R(0));
    for (unsigned n = 1; n <= count; ++n) {
        R acc(0);
        for (unsigned j = 1; j < n; ++j) {
            const R t = b[j - 1] * a[n - j];
            acc = (j % 2 == 1) ? acc + t : acc - t;
        }
        const R last = R(Rat(static_cast<long>(n))) * b[n - 1];
        acc = (n % 2 == 1) ? acc + last : acc - last;
        a[n] = acc;
    }
    a.erase(a.begin());
    return a;
}

// m x m lower-Hessenberg matrix with a_{i-j+1} on and below the diagonal and
// 1, 2, ..., m-1 on the superdiagonal.
template <Ring R>
SquareMatrix<R> gtrudi_forward_matrix(std::span<const R> a, unsigned m) {
    SquareMatrix<R> mat(m);
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j <= i; ++j) mat(i, j) = a[i - j];
        if (i + 1 < m) mat(i, i + 1) = R(Rat(static_cast<long>(i + 1)));
    }
    return mat;
}

// n x n lower-Hessenberg matrix with first column j*b_j, b_{i-j+1} elsewhere
// on and below the diagonal, and 1 on the superdiagonal.
template <Ring R>
SquareMatrix<R> gtrudi_inverse_matrix(std::span<const R> b, unsigned n) {
    SquareMatrix<R> mat(n);
    for (unsigned i = 0; i < n; ++i) {
        mat(i, 0) = R(Rat(static_cast<long>(i + 1))) * b[i];
        for (unsigned j = 1; j <= i; ++j) mat(i, j) = b[i - j];
        if (i + 1 < n) mat(i, i + 1) = R(1);
    }
    return mat;
}

template <Ring R>
GtrudiForward<R> gtrudi_forward(std::span<const R> a, unsigned m) {
    if (a.size() < m) throw InsufficientInput("sequence a is too short");
    GtrudiForward<R> out;

    out.partition_sum = R(0);
    for_each_partition_multiplicity(m, [&](const std::vector<unsigned>& mult) {
        R term(1);
        for (unsigned j = 1; j <= mult.size(); ++j) {
            const unsigned i = mult[j - 1];
            if (i == 0) continue;
            const R base = R(sign_pow(j - 1) / Rat(static_cast<long>(j))) * a[j - 1];
            term = term * R(Rat(1) / factorial_rat(i)) * ring_pow(base, i);
        }
        out.partition_sum = out.partition_sum + term;
    });

    out.determinant = R(Rat(1) / factorial_rat(m)) * det_hessenberg(gtrudi_forward_matrix(a, m));
    out.recurrence = m == 0 ? R(1) : gtrudi_b_sequence(a, m).back();
    return out;
}

template <Ring R>
GtrudiInverse<R> gtrudi_inverse(std::span<const R> b, unsigned n) {
    if (b.size() < n) throw InsufficientInput("sequence b is too short");
    GtrudiInverse<R> out;
    out.determinant = det_hessenberg(gtrudi_inverse_matrix(b, n));
    out.recurrence = n == 0 ? R(1) : gtrudi_a_sequence(b, n).back();
    return out;
}

Rat harmonic(unsigned n);
// h_n^{(k)} = sum_{i<=n} h_i^{(k-1)}, h_n^{(1)} = H_n.
Rat hyperharmonic(unsigned n, unsigned k);

// Carlitz's degenerate Bernoulli number beta_k(1/n), from t/((1+t/n)^n - 1).
Rat degen_bernoulli(unsigned k, const Rat& lambda);
// beta_k(lambda) as a polynomial in lambda, from t/(exp(log(1+lambda t)/lambda) - 1).
RatPoly degen_bernoulli_symbolic(unsigned k);

// Coefficients of (t/(e^t-1))^alpha times n!.
Rat bernoulli_order(unsigned n, unsigned alpha);
inline Rat bernoulli(unsigned n) { return bernoulli_order(n, 1); }
// Coefficients of t/((1+t)log(1+t)) times n!.
Rat norlund(unsigned n);
std::vector<Rat> norlund_table(unsigned n_max);

}  // namespace qmzv
