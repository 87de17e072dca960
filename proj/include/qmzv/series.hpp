#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "qmzv/poly.hpp"

namespace qmzv {

// Truncated power series c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N).
// Binary operations truncate to the smaller order of the two operands.
template <Ring R>
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(std::size_t order) : coeffs_(order, R(0)) {}
    TruncSeries(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order, R(0));
    }
    TruncSeries(const UniPoly<R>& p, std::size_t order) : TruncSeries(p.coeffs(), order) {}

    static TruncSeries constant(const R& c, std::size_t order) {
        TruncSeries out(order);
        if (order > 0) out.coeffs_[0] = c;
        return out;
    }
    static TruncSeries one(std::size_t order) { return constant(R(1), order); }

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    const R& operator[](std::size_t k) const { return coeffs_.at(k); }
    R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
    void set(std::size_t k, R v) { coeffs_.at(k) = std::move(v); }

    UniPoly<R> to_poly() const { return UniPoly<R>(coeffs_); }

    TruncSeries truncated(std::size_t order) const {
        TruncSeries out(std::min(order, this->order()));
        std::copy_n(coeffs_.begin(), out.order(), out.coeffs_.begin());
        return out;
    }

    TruncSeries operator-() const {
        TruncSeries out(order());
        for (std::size_t k = 0; k < order(); ++k) out.coeffs_[k] = -coeffs_[k];
        return out;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return out;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        TruncSeries out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (detail::ring_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }
    friend TruncSeries operator*(const R& c, const TruncSeries& a) {
        TruncSeries out(a.order());
        for (std::size_t k = 0; k < a.order(); ++k) out.coeffs_[k] = c * a.coeffs_[k];
        return out;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

    TruncSeries pow(unsigned long e) const {
        TruncSeries out = one(order());
        TruncSeries base = *this;
        while (e > 0) {
            if (e & 1UL) out = out * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return out;
    }

    // Known to order N-1.
    TruncSeries derivative() const {
        if (order() == 0) return {};
        TruncSeries out(order() - 1);
        for (std::size_t k = 1; k < order(); ++k) out.coeffs_[k - 1] = coeffs_[k] * R(Rat(static_cast<long>(k)));
        return out;
    }

    // Antiderivative with zero constant term; known to order N+1.
    TruncSeries integral() const {
        TruncSeries out(order() + 1);
        for (std::size_t k = 0; k < order(); ++k) out.coeffs_[k + 1] = coeffs_[k] * R(Rat(1, static_cast<long>(k + 1)));
        return out;
    }

    // Divide by t; requires c_0 = 0. Known to order N-1.
    TruncSeries shift_down() const {
        if (order() == 0) return {};
        if (!detail::ring_is_zero(coeffs_[0])) throw BadConstantTerm("shift_down needs zero constant term");
        return TruncSeries(std::vector<R>(coeffs_.begin() + 1, coeffs_.end()), order() - 1);
    }

    TruncSeries inverse() const {
        if (order() == 0) return {};
        R c0_inv;
        try {
            c0_inv = exact_div(R(1), coeffs_[0]);
        } catch (const Error&) {
            throw NonInvertibleConstantTerm("constant term is not a unit: " + qmzv::to_string(coeffs_[0]));
        }
        TruncSeries out(order());
        out.coeffs_[0] = c0_inv;
        for (std::size_t k = 1; k < order(); ++k) {
            R acc(0);
            for (std::size_t j = 1; j <= k; ++j) acc = acc + coeffs_[j] * out.coeffs_[k - j];
            out.coeffs_[k] = -(c0_inv * acc);
        }
        return out;
    }

    // log f = integral(f'/f); requires c_0 = 1.
    TruncSeries log() const {
        if (order() == 0) return {};
        if (!(coeffs_[0] == R(1))) throw BadConstantTerm("log needs constant term 1");
        const std::size_t n = order();
        TruncSeries out(n);
        // k a_k = k f_k - sum_{j=1}^{k-1} j a_j f_{k-j}
        for (std::size_t k = 1; k < n; ++k) {
            R acc = coeffs_[k] * R(Rat(static_cast<long>(k)));
            for (std::size_t j = 1; j < k; ++j) acc = acc - out.coeffs_[j] * R(Rat(static_cast<long>(j))) * coeffs_[k - j];
            out.coeffs_[k] = acc * R(Rat(1, static_cast<long>(k)));
        }
        return out;
    }

    // requires c_0 = 0.
    TruncSeries exp() const {
        if (order() == 0) return {};
        if (!detail::ring_is_zero(coeffs_[0])) throw BadConstantTerm("exp needs constant term 0");
        const std::size_t n = order();
        TruncSeries out(n);
        out.coeffs_[0] = R(1);
        for (std::size_t k = 1; k < n; ++k) {
            R acc(0);
            for (std::size_t j = 1; j <= k; ++j)
                acc = acc + coeffs_[j] * R(Rat(static_cast<long>(j))) * out.coeffs_[k - j];
            out.coeffs_[k] = acc * R(Rat(1, static_cast<long>(k)));
        }
        return out;
    }

    // this(g(t)); requires g_0 = 0.
    TruncSeries compose(const TruncSeries& g) const {
        if (g.order() > 0 && !detail::ring_is_zero(g.coeffs_[0])) throw BadConstantTerm("compose needs inner constant term 0");
        const std::size_t n = std::min(order(), g.order());
        TruncSeries out(n);
        for (std::size_t k = order(); k-- > 0;) out = out * g.truncated(n) + constant(coeffs_[k], n);
        return out;
    }

    std::string to_string(std::string_view var = "t") const {
        return to_poly().to_string(var) + " + O(" + std::string(var) + "^" + std::to_string(order()) + ")";
    }

private:
    std::vector<R> coeffs_;
};

}  // namespace qmzv
