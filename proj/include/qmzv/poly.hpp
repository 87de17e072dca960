#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmzv/ring.hpp"

namespace qmzv {

// Dense univariate polynomial; coefficient k multiplies x^k. The zero
// polynomial is the empty coefficient sequence and has no degree.
template <Ring R>
class UniPoly {
public:
    using coefficient_type = R;

    UniPoly() = default;
    UniPoly(int c) : coeffs_{R(c)} { normalize(); }         // NOLINT(google-explicit-constructor)
    UniPoly(const Rat& c) : coeffs_{R(c)} { normalize(); }  // NOLINT(google-explicit-constructor)
    explicit UniPoly(const R& c) requires(!std::same_as<R, Rat>) : coeffs_{c} { normalize(); }
    explicit UniPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { normalize(); }

    static UniPoly variable() { return monomial(1, R(1)); }
    static UniPoly monomial(std::size_t degree, const R& c) {
        std::vector<R> v(degree + 1, R(0));
        v[degree] = c;
        return UniPoly(std::move(v));
    }

    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
    const R& leading() const { return coeffs_.back(); }

    template <class S = R>
    S eval(const S& x) const {
        S acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<R> v;
        v.reserve(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * R(Rat(static_cast<long>(k))));
        return UniPoly(std::move(v));
    }

    UniPoly operator-() const {
        std::vector<R> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(-c);
        return UniPoly(std::move(v));
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        normalize();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        normalize();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::ring_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const R& c, const UniPoly& p) {
        std::vector<R> v;
        v.reserve(p.coeffs_.size());
        for (const auto& x : p.coeffs_) v.push_back(c * x);
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Long division; each step divides by the leading coefficient of the
    // divisor with exact_div, so over a non-field it succeeds only when the
    // division is exact.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
        if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
        std::vector<R> rem = coeffs_;
        const std::size_t dd = divisor.coeffs_.size() - 1;
        if (rem.size() <= dd) return {UniPoly{}, *this};
        std::vector<R> quot(rem.size() - dd, R(0));
        for (std::size_t k = rem.size(); k-- > dd;) {
            if (detail::ring_is_zero(rem[k])) continue;
            R c = exact_div(rem[k], divisor.leading());
            quot[k - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - c * divisor.coeffs_[j];
        }
        rem.resize(dd);
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }

    std::string to_string(std::string_view var = "x") const;

private:
    void normalize() {
        while (!coeffs_.empty() && detail::ring_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

template <Ring R>
bool is_zero(const UniPoly<R>& p) {
    return p.is_zero();
}

template <Ring R>
UniPoly<R> exact_div(const UniPoly<R>& a, const UniPoly<R>& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw NotExactlyDivisible("polynomial division leaves a remainder");
    return q;
}

template <Ring R>
std::string to_string(const UniPoly<R>& p);

namespace detail {
inline bool needs_parens(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-' || s[i] == ' ') return true;
    return false;
}
}  // namespace detail

template <Ring R>
std::string UniPoly<R>::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (detail::ring_is_zero(coeffs_[k])) continue;
        std::string c = qmzv::to_string(coeffs_[k]);
        bool negative = false;
        if (!detail::needs_parens(c) && !c.empty() && c[0] == '-') {
            negative = true;
            c.erase(0, 1);
        } else if (detail::needs_parens(c)) {
            c = "(" + c + ")";
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
        if (mono.empty()) out += c;
        else if (c == "1") out += mono;
        else out += c + "*" + mono;
    }
    return out;
}

template <Ring R>
std::string to_string(const UniPoly<R>& p) {
    return p.to_string();
}

template <Ring R>
std::ostream& operator<<(std::ostream& os, const UniPoly<R>& p) {
    return os << p.to_string();
}

using RatPoly = UniPoly<Rat>;
// Polynomial in Y whose coefficients are polynomials in X.
using BiPoly = UniPoly<RatPoly>;

// Pretty-print a BiPoly with explicit variable names.
std::string bipoly_to_string(const BiPoly& p, std::string_view outer = "Y", std::string_view inner = "X");

}  // namespace qmzv
