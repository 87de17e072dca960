#include "qmzv/cyclo.hpp"

#include <map>
#include <numeric>

namespace qmzv {

unsigned euler_phi(unsigned n) {
    unsigned out = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        out -= out / p;
    }
    if (m > 1) out -= out / m;
    return out;
}

RatPoly cyclotomic_poly(unsigned n) {
    if (n == 0) throw BadParams("cyclotomic polynomial needs n >= 1");
    std::map<unsigned, RatPoly> known;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        RatPoly p = RatPoly::monomial(d, Rat(1)) - RatPoly(Rat(1));
        for (const auto& [e, phi_e] : known)
            if (d % e == 0) p = exact_div(p, phi_e);
        known.emplace(d, std::move(p));
    }
    return known.at(n);
}

CycloCtx::CycloCtx(unsigned n) : n_(n), phi_(cyclotomic_poly(n)), degree_(*phi_.degree()) {
    const std::size_t d = degree_;
    if (d < 2) return;
    std::vector<Rat> cur(d);
    for (std::size_t j = 0; j < d; ++j) cur[j] = -phi_.coeff(j);  // x^d
    high_powers_.push_back(cur);
    for (std::size_t k = 1; k + 1 < d; ++k) {
        std::vector<Rat> next(d);
        const Rat top = cur[d - 1];
        for (std::size_t j = d - 1; j >= 1; --j) next[j] = cur[j - 1];
        next[0] = Rat(0);
        if (!top.is_zero())
            for (std::size_t j = 0; j < d; ++j) next[j] -= top * phi_.coeff(j);
        high_powers_.push_back(next);
        cur = std::move(next);
    }
}

std::shared_ptr<const CycloCtx> CycloCtx::make(unsigned n) {
    if (n == 0) throw BadParams("root of unity order must be >= 1");
    return std::shared_ptr<const CycloCtx>(new CycloCtx(n));
}

std::vector<Rat> CycloCtx::reduce(std::vector<Rat> coeffs) const {
    const std::size_t d = degree_;
    if (coeffs.size() <= d) {
        coeffs.resize(d);
        return coeffs;
    }
    if (coeffs.size() > 2 * d - 1) {
        // Rare path: generic polynomial remainder.
        auto [q, r] = RatPoly(std::move(coeffs)).divmod(phi_);
        std::vector<Rat> out = r.coeffs();
        out.resize(d);
        return out;
    }
    std::vector<Rat> out(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(d));
    for (std::size_t k = d; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        const auto& row = high_powers_[k - d];
        for (std::size_t j = 0; j < d; ++j)
            if (!row[j].is_zero()) out[j] += coeffs[k] * row[j];
    }
    return out;
}

CycloElem::CycloElem(CycloCtxPtr ctx, std::vector<Rat> coords) : ctx_(std::move(ctx)) {
    if (!ctx_) throw BadParams("cyclotomic element needs a context");
    coords_ = ctx_->reduce(std::move(coords));
}

CycloElem CycloElem::zeta_power(const CycloCtxPtr& ctx, long k) {
    const long n = static_cast<long>(ctx->n());
    long e = k % n;
    if (e < 0) e += n;
    std::vector<Rat> v(static_cast<std::size_t>(e) + 1);
    v[static_cast<std::size_t>(e)] = Rat(1);
    return CycloElem(ctx, std::move(v));
}

CycloElem CycloElem::from_poly(const CycloCtxPtr& ctx, const RatPoly& p) { return CycloElem(ctx, p.coeffs()); }

bool CycloElem::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t k = 1; k < coords_.size(); ++k)
        if (!coords_[k].is_zero()) return false;
    return true;
}

Rat CycloElem::as_rational() const {
    if (!is_rational()) throw NotRational(to_string());
    return coords_.empty() ? Rat(0) : coords_[0];
}

CycloCtxPtr CycloElem::common_ctx(const CycloElem& a, const CycloElem& b) {
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_) return a.ctx_;
    if (a.ctx_->n() != b.ctx_->n())
        throw ContextMismatch("mixing Q(zeta_" + std::to_string(a.ctx_->n()) + ") and Q(zeta_" +
                              std::to_string(b.ctx_->n()) + ")");
    return a.ctx_;
}

std::vector<Rat> CycloElem::coords_in(const CycloCtxPtr& ctx) const {
    if (!ctx || ctx_) return coords_;
    std::vector<Rat> v(ctx->degree());
    v[0] = coords_[0];
    return v;
}

CycloElem CycloElem::operator-() const {
    CycloElem out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    CycloElem out;
    out.ctx_ = CycloElem::common_ctx(a, b);
    out.coords_ = a.coords_in(out.ctx_);
    const auto rhs = b.coords_in(out.ctx_);
    for (std::size_t k = 0; k < rhs.size(); ++k) out.coords_[k] += rhs[k];
    return out;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    CycloElem out;
    out.ctx_ = CycloElem::common_ctx(a, b);
    // Scalar times anything needs no reduction.
    if (!a.ctx_ || !b.ctx_) {
        const Rat& c = !a.ctx_ ? a.coords_[0] : b.coords_[0];
        out.coords_ = !a.ctx_ ? b.coords_ : a.coords_;
        for (auto& x : out.coords_) x *= c;
        return out;
    }
    const auto& x = a.coords_;
    const auto& y = b.coords_;
    std::vector<Rat> prod(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) prod[i + j] += x[i] * y[j];
    }
    out.coords_ = out.ctx_->reduce(std::move(prod));
    return out;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_->n() != b.ctx_->n()) return false;
    const CycloCtxPtr ctx = a.ctx_ ? a.ctx_ : b.ctx_;
    return a.coords_in(ctx) == b.coords_in(ctx);
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw ZeroInverse("inverse of zero in Q(zeta_n)");
    if (!ctx_) return CycloElem(coords_[0].inverse());
    RatPoly r0 = ctx_->phi_n();
    RatPoly r1(coords_);
    RatPoly t0;
    RatPoly t1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    // r0 is a nonzero constant because Phi_n is irreducible.
    const Rat c = r0.coeff(0).inverse();
    return CycloElem(ctx_, (Rat(c) * t0).coeffs());
}

CycloElem CycloElem::galois(long a) const {
    if (!ctx_) return *this;
    const long n = static_cast<long>(ctx_->n());
    if (std::gcd(((a % n) + n) % n, n) != 1) throw BadParams("galois exponent must be coprime to n");
    CycloElem out(0);
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k].is_zero()) continue;
        out = out + CycloElem(coords_[k]) * zeta_power(ctx_, a * static_cast<long>(k));
    }
    if (!out.ctx_) out = CycloElem(ctx_, out.coords_);
    return out;
}

std::string CycloElem::to_string() const { return RatPoly(coords_).to_string("z"); }

CycloElem exact_div(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

Rat product_one_minus_powers(const CycloCtxPtr& ctx) {
    if (ctx->n() < 2) throw BadParams("product over 1 - zeta^j needs n >= 2");
    CycloElem acc(1);
    for (unsigned j = 1; j < ctx->n(); ++j) acc = acc * (CycloElem(1) - CycloElem::zeta_power(ctx, j));
    return acc.as_rational();
}

}  // namespace qmzv
