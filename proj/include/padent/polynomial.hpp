#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "padent/matrix.hpp"
#include "padent/padic.hpp"

namespace padent {

// X^n + a_{n-1} X^{n-1} + ... + a_0, stored as a_0..a_{n-1}.
class MonicPolynomial {
public:
    MonicPolynomial() = default;
    explicit MonicPolynomial(std::vector<Rational> lower_coefficients)
        : coeffs_(std::move(lower_coefficients)) {}

    // Builds prod (X - r).
    static MonicPolynomial from_roots(const std::vector<Rational>& roots);

    std::size_t degree() const noexcept { return coeffs_.size(); }
    // Coefficient of X^i for 0 <= i <= degree (a_n = 1).
    Rational coefficient(std::size_t i) const;
    const std::vector<Rational>& lower_coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const;

    friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

// det(X I - A), via exact Hessenberg reduction over Q.
MonicPolynomial charpoly(const RationalMatrix& a);

// Companion matrix whose characteristic polynomial is f.
RationalMatrix companion(const MonicPolynomial& f);

// Accepts forms like "X^2-10/3X+1", "x^3 + 2*x - 1/5", "X". The leading
// coefficient must be 1. Throws ParseError.
MonicPolynomial parse_monic_polynomial(std::string_view text);
std::string to_string(const MonicPolynomial& f);

} // namespace padent
