#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qmzv/errors.hpp"

namespace qmzv {

static_assert(sizeof(long) == sizeof(long long), "LP64 data model expected");

// Arbitrary-precision rational in canonical form: positive denominator,
// numerator and denominator coprime. Backed by GMP's mpq_class.
class Rat {
public:
    Rat() = default;
    Rat(int v) : v_(v) {}                       // NOLINT(google-explicit-constructor)
    Rat(long v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
    Rat(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rat(unsigned v) : v_(v) {}                  // NOLINT(google-explicit-constructor)
    Rat(unsigned long v) : v_(v) {}             // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& v) : v_(v) {}          // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rat parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const noexcept { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }
    // "p" for integers, "p/q" otherwise.
    std::string to_string() const { return v_.get_str(); }
    // Decimal approximation with the given number of significant digits.
    std::string to_decimal(int digits = 20) const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat inverse() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline std::string to_string(const Rat& r) { return r.to_string(); }
Rat exact_div(const Rat& a, const Rat& b);

Rat pow(const Rat& base, long exponent);

// Binomial coefficient C(top, k) for integer top (negative allowed) and k >= 0.
mpz_class binomial(long top, long k);
mpz_class factorial(unsigned long n);

}  // namespace qmzv
