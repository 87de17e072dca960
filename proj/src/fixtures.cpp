#include "qmzv/fixtures.hpp"

#include <algorithm>

namespace qmzv {

RatPoly poly_desc(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    std::reverse(v.begin(), v.end());
    return RatPoly(std::move(v));
}

namespace {

// (n - a)
RatPoly root(long a) { return poly_desc({1, -a}); }

RatPoly product(const Rat& scale, std::initializer_list<RatPoly> factors) {
    RatPoly out(scale);
    for (const auto& f : factors) out = out * f;
    return out;
}

Rat fact(unsigned n) { return Rat(factorial(n)); }

}  // namespace

std::vector<DisplayedPolynomial> displayed_polynomials() {
    std::vector<DisplayedPolynomial> out;
    auto add = [&](std::string label, unsigned m, unsigned s, RatPoly p) {
        out.push_back({std::move(label), m, s, std::move(p)});
    };

    // Z_n(zeta_n; 1, s), s = 2..9.
    add("Z(1,2)", 1, 2, product(Rat(-1, 12), {root(1), root(5)}));
    add("Z(1,3)", 1, 3, product(Rat(-1, 8), {root(1), root(3)}));
    add("Z(1,4)", 1, 4, product(Rat(1) / fact(6), {root(1), poly_desc({1, 1, -109, 251})}));
    add("Z(1,5)", 1, 5, product(Rat(1, 288), {root(1), root(5), poly_desc({1, 6, -19})}));
    add("Z(1,6)", 1, 6,
        product(Rat(-1) / (Rat(12) * fact(7)), {root(1), poly_desc({2, 2, -355, -355, 11153, -19087})}));
    add("Z(1,7)", 1, 7,
        product(Rat(-1) / (Rat(24) * fact(6)), {root(1), root(7), poly_desc({2, 16, -33, -376, 751})}));
    add("Z(1,8)", 1, 8,
        product(Rat(1) / fact(10),
                {root(1), poly_desc({3, 3, -917, -917, 39697, 39697, -744383, 1070017})}));
    add("Z(1,9)", 1, 9,
        product(Rat(27) / (Rat(2) * fact(10)),
                {root(1), root(3), root(9), poly_desc({1, 13, 10, -350, -851, 2857})}));

    // s = 2, m = 1..4.
    add("Z(1,2) scaled form", 1, 2, product(Rat(-2) / fact(4), {root(1), root(5)}));
    add("Z(2,2)", 2, 2, product(Rat(2) / fact(6), {root(1), root(2), poly_desc({1, -12, 47})}));
    add("Z(3,2)", 3, 2, product(Rat(-2) / fact(8), {root(1), root(2), root(3), poly_desc({1, -22, 179, -638})}));
    add("Z(4,2)", 4, 2,
        product(Rat(2) / fact(10),
                {root(1), root(2), root(3), root(4), poly_desc({1, -35, 485, -3325, 11274})}));

    // s = 3, m = 1..4.
    add("Z(1,3) second listing", 1, 3, product(Rat(-1, 8), {root(1), root(3)}));
    add("Z(2,3)", 2, 3, product(Rat(6) / fact(9), {root(1), root(2), poly_desc({1, 3, 301, -2883, 6898})}));
    add("Z(3,3)", 3, 3,
        product(Rat(-3) / fact(10), {root(1), root(2), root(3), poly_desc({1, -4, 100, -2290, 15019, -32986})}));
    add("Z(4,3)", 4, 3,
        product(Rat(2) / (Rat(5) * fact(14)),
                {root(1), root(2), root(3), root(4),
                 poly_desc({1, 10, 3705, -53340, 360423, -7406910, 99197195, -551374960, 1157817876})}));

    // s = 4, m = 1..2.
    add("Z(1,4) s=4", 1, 4, product(Rat(1) / fact(6), {root(1), poly_desc({1, 1, -109, 251})}));
    add("Z(2,4)", 2, 4,
        product(Rat(2) / fact(10), {root(1), root(2), poly_desc({1, 3, -148, 810, 12869, -101613, 188878})}));
    return out;
}

std::vector<Rat> displayed_constant_terms() {
    return {Rat(-1, 2), Rat(-5, 12), Rat(-3, 8), Rat(-251, 720), Rat(-95, 288), Rat(-19087, 60480),
            Rat(-5257, 17280)};
}

std::vector<RatPoly> displayed_s2_inner_factors() {
    return {-poly_desc({1, -5}), poly_desc({1, -12, 47}), -poly_desc({1, -22, 179, -638}),
            poly_desc({1, -35, 485, -3325, 11274})};
}

}  // namespace qmzv
