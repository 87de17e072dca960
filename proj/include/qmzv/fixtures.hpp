#pragma once

#include <string>
#include <vector>

#include "qmzv/poly.hpp"

namespace qmzv {

// Reference polynomial values n -> Z_n(zeta_n; m, s), expanded from their
// factored displays.
struct DisplayedPolynomial {
    std::string label;
    unsigned m;
    unsigned s;
    RatPoly poly;
};

std::vector<DisplayedPolynomial> displayed_polynomials();

// Reference constant terms of Z_n(zeta_n; 1, s) for s = 1, 2, ...
std::vector<Rat> displayed_constant_terms();

// Reference inner factors of the s = 2 values, as polynomials in n; entry m-1
// is the factor for m (sign included so that it equals the r-Stirling sum
// sum_k [2m+2, m+k+2]^{(m+1,1)} (-n)^k).
std::vector<RatPoly> displayed_s2_inner_factors();

// Polynomial from integer coefficients listed by descending degree.
RatPoly poly_desc(std::initializer_list<long> coeffs);

}  // namespace qmzv
