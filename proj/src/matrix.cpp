#include "sylvdet/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "sylvdet/errors.hpp"

namespace sylvdet {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : DenseMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) throw std::invalid_argument("DenseMatrix rows must form a square");
        std::size_t c = 0;
        for (const auto& v : row) (*this)(r, c++) = v;
        ++r;
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<Rational>& entries) {
    DenseMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

DenseMatrix DenseMatrix::trailing(std::size_t first) const {
    DenseMatrix out(dim_ - first);
    for (std::size_t r = first; r < dim_; ++r) {
        for (std::size_t c = first; c < dim_; ++c) out(r - first, c - first) = (*this)(r, c);
    }
    return out;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in matrix product");
    const std::size_t n = lhs.dim_;
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

DenseMatrix operator+(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in matrix sum");
    DenseMatrix out = lhs;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

DenseMatrix operator*(const Rational& scalar, const DenseMatrix& m) {
    DenseMatrix out = m;
    for (auto& v : out.entries_) v *= scalar;
    return out;
}

std::string DenseMatrix::str() const {
    std::vector<std::size_t> width(dim_, 0);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) width[c] = std::max(width[c], (*this)(r, c).str().size());
    }
    std::string out;
    for (std::size_t r = 0; r < dim_; ++r) {
        out += "[";
        for (std::size_t c = 0; c < dim_; ++c) {
            const std::string s = (*this)(r, c).str();
            out += std::string(width[c] - s.size() + (c ? 2 : 0), ' ') + s;
        }
        out += "]\n";
    }
    return out;
}

DenseMatrix to_dense(const TridiagonalSpec& spec) {
    DenseMatrix g(spec.dim);
    for (std::size_t n = 0; n < spec.dim; ++n) g(n, n) = spec.diag[n];
    for (std::size_t n = 0; n + 1 < spec.dim; ++n) {
        g(n, n + 1) = spec.sup[n];
        g(n + 1, n) = spec.sub[n];
    }
    return g;
}

Rational bareiss_determinant(const DenseMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;

    // Scale every row to integers; det(m) = det(scaled) / prod(scale).
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale_product = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class row_lcm = 1;
        for (std::size_t c = 0; c < n; ++c) {
            mpz_class den = m(r, c).denominator();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < n; ++c) {
            a[r][c] = m(r, c).numerator() * (row_lcm / m(r, c).denominator());
        }
        scale_product *= row_lcm;
    }

    int sign = 1;
    mpz_class previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    return Rational(a[n - 1][n - 1] * sign, scale_product);
}

DenseMatrix invert(const DenseMatrix& m) {
    const std::size_t n = m.dim();
    DenseMatrix work = m;
    DenseMatrix inv = DenseMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Singular("matrix is singular at elimination step " + std::to_string(col), col);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(col, j), work(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        }
        const Rational p = work(col, col).reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= p;
            inv(col, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work(i, col).is_zero()) continue;
            const Rational f = work(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!work(col, j).is_zero()) work(i, j) -= f * work(col, j);
                if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace sylvdet
