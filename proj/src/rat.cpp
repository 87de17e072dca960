#include "qmzv/rat.hpp"

#include <ostream>

namespace qmzv {

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + s);
    v.canonicalize();
    return Rat(v);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rat(mpq_class(1 / v_));
}

// Fixed point with `digits` places, rounded half away from zero.
std::string Rat::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = abs(v_.get_num()) * scale * 2 + v_.get_den();
    mpz_class den = v_.get_den() * 2;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string body = q.get_str();
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    std::string out = body.substr(0, body.size() - static_cast<std::size_t>(digits));
    if (digits > 0) out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
    if (v_ < 0) out.insert(0, "-");
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

Rat pow(const Rat& base, long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(num, den);
}

mpz_class binomial(long top, long k) {
    if (k < 0) return 0;
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), mpz_class(top).get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

mpz_class factorial(unsigned long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace qmzv
