#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "padent/entropy_value.hpp"
#include "padent/matrix.hpp"
#include "padent/padic.hpp"
#include "padent/polynomial.hpp"

namespace padent {

struct NewtonSegment {
    Rational slope;
    std::size_t length;

    friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

// Lower convex hull of (i, v_p(a_i)) over the nonzero coefficients. Roots at
// zero (X^k dividing f) sit at valuation +infinity and are counted separately.
struct NewtonPolygon {
    std::vector<NewtonSegment> segments; // strictly increasing slopes
    std::size_t zero_root_multiplicity = 0;

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

struct RootValuation {
    Rational valuation;
    std::size_t multiplicity;

    friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

struct RootValuationMultiset {
    std::vector<RootValuation> finite; // decreasing valuation
    std::size_t zero_roots = 0;

    std::size_t size() const;
    friend bool operator==(const RootValuationMultiset&, const RootValuationMultiset&) = default;
};

NewtonPolygon newton_polygon(const MonicPolynomial& f, Prime p);

// A segment of slope s and length l contributes l roots of valuation -s.
RootValuationMultiset root_valuations(const MonicPolynomial& f, Prime p);

// m with prod_{|lambda|_p > 1} |lambda|_p = p^m, i.e. the total rise of the
// positive-slope segments.
std::uint64_t expanding_exponent(const MonicPolynomial& f, Prime p);

// h_top of x -> A x on Q_p^n: sum of log |lambda|_p over eigenvalues outside the unit disc.
EntropyValue yuzvinski_entropy(const RationalMatrix& a, Prime p);

// s(A) = prod_{|lambda|_p > 1} |lambda|_p.
Integer yuzvinski_scale(const RationalMatrix& a, Prime p);

} // namespace padent
