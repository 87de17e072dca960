#include <set>

#include "qmzv/interpolate.hpp"
#include "qmzv/poly.hpp"

namespace qmzv {

std::string bipoly_to_string(const BiPoly& p, std::string_view outer, std::string_view inner) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const RatPoly& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string(inner) + ")";
        if (k >= 1) out += "*" + std::string(outer) + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
}

RatPoly poly_interpolate(const std::vector<Point>& points) {
    std::set<Rat> seen;
    for (const auto& [x, y] : points)
        if (!seen.insert(x).second) throw DuplicateAbscissa("duplicate abscissa " + x.to_string());

    const std::size_t n = points.size();
    std::vector<Rat> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            diff[i] = (diff[i] - diff[i - 1]) / (points[i].first - points[i - level].first);

    // Horner over the Newton basis.
    RatPoly out;
    for (std::size_t i = n; i-- > 0;) {
        out = out * RatPoly{-points[i].first, Rat(1)} + RatPoly(diff[i]);
    }
    return out;
}

}  // namespace qmzv
