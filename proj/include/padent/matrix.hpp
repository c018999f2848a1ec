#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "padent/padic.hpp"

namespace padent {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix over Q. Zero-sized dimensions are allowed so that an
// absent block (e.g. n2 = 0) is an ordinary value.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(const RationalVector& entries);
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector column(std::size_t c) const;
    RationalVector row(std::size_t r) const;
    RationalMatrix transpose() const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& s);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalVector operator*(const RationalMatrix& a, const RationalVector& x);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    RationalMatrix power(unsigned n) const;

    // [a | b] and [a ; b].
    static RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
    static RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
    // [[a, 0], [b, c]]
    static RationalMatrix block_lower(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational determinant(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);
// Throws ValidationError if singular.
RationalMatrix inverse(const RationalMatrix& a);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

} // namespace padent
