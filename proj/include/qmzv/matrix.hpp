#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qmzv/ring.hpp"

namespace qmzv {

template <Ring R>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, R(0)) {}
    SquareMatrix(std::initializer_list<std::initializer_list<R>> rows) : SquareMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != dim_) throw ShapeViolation("matrix rows must all have length equal to the row count");
            std::size_t j = 0;
            for (const auto& v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    static SquareMatrix identity(std::size_t dim) {
        SquareMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }
    R& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

    bool is_lower_hessenberg() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 2; j < dim_; ++j)
                if (!is_zero((*this)(i, j))) return false;
        return true;
    }

    SquareMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        SquareMatrix out(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
        return out;
    }

private:
    std::size_t dim_ = 0;
    std::vector<R> entries_;
};

// Bareiss fraction-free elimination. Every division is exact in an integral
// domain, so this works over Rat, polynomial rings and nested polynomial rings.
template <Ring R>
R det_fraction_free(SquareMatrix<R> m) {
    const std::size_t d = m.dim();
    if (d == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < d && is_zero(m(p, k))) ++p;
            if (p == d) return R(0);
            for (std::size_t j = 0; j < d; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            for (std::size_t j = k + 1; j < d; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R det = m(d - 1, d - 1);
    return negate ? -det : det;
}

// Lower-Hessenberg determinant (entries with j > i+1 vanish) by the row
// recurrence D_k = sum_{i<=k} (-1)^{k-i} h[k][i] (prod_{j=i}^{k-1} h[j][j+1]) D_{i-1},
// which needs O(d^2) ring multiplications and no division.
template <Ring R>
R det_hessenberg(const SquareMatrix<R>& m) {
    if (!m.is_lower_hessenberg()) throw ShapeViolation("matrix is not lower Hessenberg");
    const std::size_t d = m.dim();
    std::vector<R> dets(d + 1, R(0));
    dets[0] = R(1);
    for (std::size_t k = 1; k <= d; ++k) {
        // 1-based row k is index k-1.
        R acc = m(k - 1, k - 1) * dets[k - 1];
        R super(1);
        bool negative = false;
        for (std::size_t i = k - 1; i >= 1; --i) {
            super = super * m(i - 1, i);
            negative = !negative;
            R term = m(k - 1, i - 1) * super * dets[i - 1];
            acc = negative ? acc - term : acc + term;
        }
        dets[k] = acc;
    }
    return dets[d];
}

namespace detail {
inline void k_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        k_subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All l-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t l) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    detail::k_subsets(n, l, 0, cur, out);
    return out;
}

// l-th compound (exterior power) matrix: entries are the l x l minors indexed
// by lexicographically ordered l-subsets. Its eigenvalues are the l-fold
// products of eigenvalues of the input.
template <Ring R>
SquareMatrix<R> compound_matrix(const SquareMatrix<R>& m, std::size_t l) {
    if (l > m.dim()) throw BadParams("compound order exceeds matrix dimension");
    const auto subsets = subsets_of_size(m.dim(), l);
    SquareMatrix<R> out(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j)
            out(i, j) = det_fraction_free(m.submatrix(subsets[i], subsets[j]));
    return out;
}

}  // namespace qmzv
