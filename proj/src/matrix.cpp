#include "padent/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "padent/errors.hpp"

namespace padent {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ValidationError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& entries) {
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw ValidationError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ValidationError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ValidationError("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    for (auto& x : data_)
        x *= s;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
        throw ValidationError("matrix product: shape mismatch");
    RationalMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                m(i, j) += aik * b(k, j);
        }
    return m;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
    if (a.cols_ != x.size())
        throw ValidationError("matrix-vector product: shape mismatch");
    RationalVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            y[i] += a(i, k) * x[k];
    return y;
}

RationalMatrix RationalMatrix::power(unsigned n) const {
    if (!is_square())
        throw ValidationError("matrix power of non-square matrix");
    RationalMatrix result = identity(rows_);
    RationalMatrix base = *this;
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_)
        throw ValidationError("hstack: row mismatch");
    RationalMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c)
            m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.cols_)
        throw ValidationError("vstack: column mismatch");
    RationalMatrix m(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return m;
}

RationalMatrix RationalMatrix::block_lower(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c) {
    if (!a.is_square() || !c.is_square() || b.rows_ != c.rows_ || b.cols_ != a.cols_)
        throw ValidationError("block_lower: incompatible block shapes");
    std::size_t n1 = a.rows_, n2 = c.rows_;
    RationalMatrix m(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < n2; ++i) {
        for (std::size_t j = 0; j < n1; ++j)
            m(n1 + i, j) = b(i, j);
        for (std::size_t j = 0; j < n2; ++j)
            m(n1 + i, n1 + j) = c(i, j);
    }
    return m;
}

namespace {

// Row echelon form in place; returns rank and accumulates the determinant sign/product.
std::size_t eliminate(RationalMatrix& m, Rational* det) {
    std::size_t rank = 0;
    if (det)
        *det = 1;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && sgn(m(pivot, c)) == 0)
            ++pivot;
        if (pivot == m.rows()) {
            if (det)
                *det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(pivot, k), m(rank, k));
            if (det)
                *det = -*det;
        }
        Rational piv = m(rank, c);
        if (det)
            *det *= piv;
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (sgn(m(r, c)) == 0)
                continue;
            Rational f = m(r, c) / piv;
            for (std::size_t k = c; k < m.cols(); ++k)
                m(r, k) -= f * m(rank, k);
        }
        ++rank;
    }
    return rank;
}

} // namespace

Rational determinant(const RationalMatrix& a) {
    if (!a.is_square())
        throw ValidationError("determinant of non-square matrix");
    if (a.rows() == 0)
        return Rational(1);
    RationalMatrix m = a;
    Rational det;
    std::size_t r = eliminate(m, &det);
    return r == a.rows() ? det : Rational(0);
}

std::size_t rank(const RationalMatrix& a) {
    RationalMatrix m = a;
    return eliminate(m, nullptr);
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square())
        throw ValidationError("inverse of non-square matrix");
    std::size_t n = a.rows();
    RationalMatrix m = RationalMatrix::hstack(a, RationalMatrix::identity(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && sgn(m(pivot, c)) == 0)
            ++pivot;
        if (pivot == n)
            throw ValidationError("matrix is singular");
        if (pivot != c)
            for (std::size_t k = 0; k < 2 * n; ++k)
                std::swap(m(pivot, k), m(c, k));
        Rational inv = 1 / m(c, c);
        for (std::size_t k = 0; k < 2 * n; ++k)
            m(c, k) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m(r, c)) == 0)
                continue;
            Rational f = m(r, c);
            for (std::size_t k = 0; k < 2 * n; ++k)
                m(r, k) -= f * m(c, k);
        }
    }
    RationalMatrix result(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            result(r, c) = m(r, n + c);
    return result;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << to_string(m(r, c));
        os << ']';
    }
    return os << ']';
}

} // namespace padent
