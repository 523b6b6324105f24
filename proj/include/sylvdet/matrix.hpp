#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sylvdet/families.hpp"
#include "sylvdet/rational.hpp"

namespace sylvdet {

/// Square dense matrix of exact rationals, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    DenseMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static DenseMatrix identity(std::size_t dim);
    static DenseMatrix diagonal(const std::vector<Rational>& entries);

    std::size_t dim() const noexcept { return dim_; }

    Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    /// Square sub-block starting at (first, first) extending to the bottom-right corner.
    DenseMatrix trailing(std::size_t first) const;

    friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
    friend DenseMatrix operator+(const DenseMatrix& lhs, const DenseMatrix& rhs);
    friend DenseMatrix operator*(const Rational& scalar, const DenseMatrix& m);
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    /// Rows joined by newlines, entries right-aligned per column.
    std::string str() const;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> entries_;
};

/*
 * The one place where a TridiagonalSpec (entries of tI + G) becomes the
 * matrix G itself: G(n,n) = diag[n] = -b_n, G(n,n+1) = sup[n] = a_n,
 * G(n+1,n) = sub[n] = c_{n+1}. The t on the diagonal is dropped, the signs
 * are kept.
 */
DenseMatrix to_dense(const TridiagonalSpec& spec);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing row denominators.
Rational bareiss_determinant(const DenseMatrix& m);

/// Gauss-Jordan inverse over the rationals. Throws Singular with the failing column.
DenseMatrix invert(const DenseMatrix& m);

}  // namespace sylvdet
