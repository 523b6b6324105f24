#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sylvdet/polynomial.hpp"
#include "sylvdet/rational.hpp"

namespace sylvdet {

using Point = std::pair<Rational, Rational>;

/// Monic product of (t - r) over the multiset of roots; the empty product is 1.
Polynomial poly_from_roots(std::span<const Rational> roots);

Rational poly_eval(const Polynomial& p, const Rational& at);

/// Unique polynomial of degree < points.size() through every point (Newton form,
/// expanded). Throws DuplicateNode if two abscissae coincide.
Polynomial interpolate(std::span<const Point> points);

/// (c)_k = c (c+1) ... (c+k-1).
Rational shifted_factorial(const Rational& c, unsigned k);

/// (a;q)_k = (1-a)(1-aq)...(1-aq^{k-1}).
Rational q_pochhammer(const Rational& a, const Rational& q, unsigned k);

}  // namespace sylvdet
