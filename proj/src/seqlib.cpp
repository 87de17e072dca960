#include "qmzv/seqlib.hpp"

namespace qmzv {

Rat harmonic(unsigned n) {
    Rat acc(0);
    for (unsigned i = 1; i <= n; ++i) acc += Rat(1, i);
    return acc;
}

Rat hyperharmonic(unsigned n, unsigned k) {
    if (k < 1) throw BadParams("hyperharmonic order must be >= 1");
    std::vector<Rat> level(n + 1);
    for (unsigned i = 1; i <= n; ++i) level[i] = level[i - 1] + Rat(1, i);
    for (unsigned order = 2; order <= k; ++order) {
        std::vector<Rat> next(n + 1);
        for (unsigned i = 1; i <= n; ++i) next[i] = next[i - 1] + level[i];
        level = std::move(next);
    }
    return level[n];
}

Rat degen_bernoulli(unsigned k, const Rat& lambda) {
    if (lambda.sign() <= 0 || lambda.numerator() != 1 || !lambda.denominator().fits_ulong_p())
        throw UnsupportedLambda("rational mode needs lambda = 1/n, got " + lambda.to_string());
    const unsigned long n = lambda.denominator().get_ui();
    const std::size_t order = k + 1;
    // ((1 + t/n)^n - 1)/t = sum_{j>=1} C(n,j) n^{-j} t^{j-1}
    std::vector<Rat> denom(order);
    for (std::size_t j = 1; j <= order && j <= n; ++j)
        denom[j - 1] = Rat(binomial(static_cast<long>(n), static_cast<long>(j))) * pow(lambda, static_cast<long>(j));
    const TruncSeries<Rat> gen = TruncSeries<Rat>(denom, order).inverse();
    return gen[k] * factorial_rat(k);
}

RatPoly degen_bernoulli_symbolic(unsigned k) {
    const std::size_t order = k + 2;
    // log(1 + lambda t)/lambda = sum_{j>=1} (-1)^{j-1} lambda^{j-1} t^j / j
    std::vector<RatPoly> g(order);
    for (std::size_t j = 1; j < order; ++j)
        g[j] = RatPoly::monomial(j - 1, sign_pow(static_cast<long>(j - 1)) / Rat(static_cast<long>(j)));
    const auto e = TruncSeries<RatPoly>(g, order).exp();
    const auto denom = (e - TruncSeries<RatPoly>::one(order)).shift_down();
    const auto gen = denom.inverse();
    return RatPoly(factorial_rat(k)) * gen[k];
}

Rat bernoulli_order(unsigned n, unsigned alpha) {
    const std::size_t order = n + 1;
    std::vector<Rat> h(order);
    for (std::size_t j = 0; j < order; ++j) h[j] = Rat(1) / factorial_rat(static_cast<unsigned>(j + 1));
    const auto base = TruncSeries<Rat>(h, order).inverse();
    return base.pow(alpha)[n] * factorial_rat(n);
}

std::vector<Rat> norlund_table(unsigned n_max) {
    const std::size_t order = n_max + 1;
    // (1+t) log(1+t)/t
    std::vector<Rat> l(order);
    for (std::size_t j = 0; j < order; ++j) l[j] = sign_pow(static_cast<long>(j)) / Rat(static_cast<long>(j + 1));
    const TruncSeries<Rat> one_plus_t(std::vector<Rat>{Rat(1), Rat(1)}, order);
    const auto gen = (one_plus_t * TruncSeries<Rat>(l, order)).inverse();
    std::vector<Rat> out(order);
    for (std::size_t j = 0; j < order; ++j) out[j] = gen[j] * factorial_rat(static_cast<unsigned>(j));
    return out;
}

Rat norlund(unsigned n) { return norlund_table(n).back(); }

}  // namespace qmzv
