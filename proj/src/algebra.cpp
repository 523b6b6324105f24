#include "sylvdet/algebra.hpp"

#include "sylvdet/errors.hpp"

namespace sylvdet {

Polynomial poly_from_roots(std::span<const Rational> roots) {
    Polynomial acc = Polynomial::constant(1);
    for (const auto& r : roots) acc *= Polynomial({-r, Rational(1)});
    return acc;
}

Rational poly_eval(const Polynomial& p, const Rational& at) { return p(at); }

Polynomial interpolate(std::span<const Point> points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first) {
                throw DuplicateNode("interpolation node " + points[i].first.str() + " appears twice");
            }
        }
    }

    // Divided differences in place: coef[k] = f[x_0, ..., x_k].
    std::vector<Rational> coef;
    coef.reserve(n);
    for (const auto& p : points) coef.push_back(p.second);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - level].first);
        }
    }

    // Nested Newton form, expanded from the innermost term outward.
    Polynomial acc;
    for (std::size_t k = n; k-- > 0;) {
        acc *= Polynomial({-points[k].first, Rational(1)});
        acc += Polynomial::constant(coef[k]);
    }
    return acc;
}

Rational shifted_factorial(const Rational& c, unsigned k) {
    Rational acc = 1;
    for (unsigned j = 0; j < k; ++j) acc *= c + Rational(j);
    return acc;
}

Rational q_pochhammer(const Rational& a, const Rational& q, unsigned k) {
    Rational acc = 1;
    Rational term = a;
    for (unsigned j = 0; j < k; ++j) {
        acc *= Rational(1) - term;
        term *= q;
    }
    return acc;
}

}  // namespace sylvdet
