#include "sylvdet/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "sylvdet/errors.hpp"

namespace sylvdet {

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    // mpz_class rejects a leading '+'
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    out = mpz_class(digits, 10);
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    mpz_class num;
    mpz_class den = 1;
    const auto slash = text.find('/');
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_integer(text, num);
    } else {
        ok = parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
    }
    if (!ok) {
        throw UsageError("not a rational literal: '" + std::string(text) + "'");
    }
    if (den == 0) {
        throw UsageError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(mpq_class(1) / value_);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(base.reciprocal(), -exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace sylvdet
