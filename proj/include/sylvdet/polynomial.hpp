#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sylvdet/rational.hpp"

namespace sylvdet {

/*
 * Dense univariate polynomial over the rationals, coefficients in ascending
 * degree. The zero polynomial has no coefficients; otherwise the last
 * coefficient is nonzero.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// The polynomial t.
    static Polynomial variable();

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Zero beyond the degree.
    Rational coefficient(std::size_t power) const;
    Rational leading() const;

    /// Horner evaluation.
    Rational operator()(const Rational& at) const;

    /// p(inner(t)).
    Polynomial compose(const Polynomial& inner) const;
    /// p(scale * (t + offset)).
    Polynomial affine(const Rational& scale, const Rational& offset) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable expanded form, e.g. "t^3 - 4*t".
    std::string str(char variable = 't') const;
    /// Ascending coefficients as canonical rational strings.
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace sylvdet
