#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qmzv/poly.hpp"

namespace qmzv {

// n-th cyclotomic polynomial, obtained by dividing x^n - 1 by Phi_d for every
// proper divisor d of n. Coefficients are integers.
RatPoly cyclotomic_poly(unsigned n);

unsigned euler_phi(unsigned n);

// The field Q(zeta_n) = Q[x]/(Phi_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
class CycloCtx {
public:
    static std::shared_ptr<const CycloCtx> make(unsigned n);

    unsigned n() const noexcept { return n_; }
    const RatPoly& phi_n() const noexcept { return phi_; }
    std::size_t degree() const noexcept { return degree_; }

    // Reduce a coefficient vector of any length modulo Phi_n into `degree()` coordinates.
    std::vector<Rat> reduce(std::vector<Rat> coeffs) const;

private:
    explicit CycloCtx(unsigned n);

    unsigned n_;
    RatPoly phi_;
    std::size_t degree_;
    // x^{degree + k} mod Phi_n for k = 0 .. degree - 2.
    std::vector<std::vector<Rat>> high_powers_;
};

using CycloCtxPtr = std::shared_ptr<const CycloCtx>;

// Element of Q(zeta_n). An element without a context is a plain rational
// scalar; it adopts the context of whatever element it is combined with.
// Combining elements of two different fields throws ContextMismatch.
class CycloElem {
public:
    CycloElem() : coords_{Rat(0)} {}
    CycloElem(int v) : coords_{Rat(v)} {}          // NOLINT(google-explicit-constructor)
    CycloElem(const Rat& v) : coords_{v} {}        // NOLINT(google-explicit-constructor)
    CycloElem(CycloCtxPtr ctx, std::vector<Rat> coords);

    static CycloElem zeta(const CycloCtxPtr& ctx) { return zeta_power(ctx, 1); }
    // zeta^k for any integer k (taken modulo n).
    static CycloElem zeta_power(const CycloCtxPtr& ctx, long k);
    // Embed a polynomial in zeta.
    static CycloElem from_poly(const CycloCtxPtr& ctx, const RatPoly& p);

    const CycloCtxPtr& ctx() const noexcept { return ctx_; }
    // Power-basis coordinates; a scalar has exactly one.
    const std::vector<Rat>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws NotRational when a coordinate of index >= 1 is nonzero.
    Rat as_rational() const;

    CycloElem inverse() const;
    // Field automorphism zeta -> zeta^a, gcd(a, n) = 1.
    CycloElem galois(long a) const;

    CycloElem operator-() const;
    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend bool operator==(const CycloElem& a, const CycloElem& b);

    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
    CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

    std::string to_string() const;

private:
    static CycloCtxPtr common_ctx(const CycloElem& a, const CycloElem& b);
    std::vector<Rat> coords_in(const CycloCtxPtr& ctx) const;

    CycloCtxPtr ctx_;
    std::vector<Rat> coords_;
};

inline bool is_zero(const CycloElem& a) { return a.is_zero(); }
inline std::string to_string(const CycloElem& a) { return a.to_string(); }
// a / b; throws ZeroInverse when b = 0.
CycloElem exact_div(const CycloElem& a, const CycloElem& b);

// prod_{j=1}^{n-1} (1 - zeta^j), computed in the field; equals n.
Rat product_one_minus_powers(const CycloCtxPtr& ctx);

}  // namespace qmzv
