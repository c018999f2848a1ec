#include "padent/newton.hpp"

#include <stdexcept>

#include "padent/errors.hpp"

namespace padent {

namespace {

struct Point {
    long x;
    long y;
};

// > 0 iff o -> a -> b turns counter-clockwise.
long long cross(const Point& o, const Point& a, const Point& b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) - static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

} // namespace

std::size_t RootValuationMultiset::size() const {
    std::size_t n = zero_roots;
    for (const auto& r : finite)
        n += r.multiplicity;
    return n;
}

NewtonPolygon newton_polygon(const MonicPolynomial& f, Prime p) {
    NewtonPolygon poly;
    const std::size_t n = f.degree();
    std::vector<Point> points;
    for (std::size_t i = 0; i <= n; ++i) {
        Rational c = f.coefficient(i);
        if (sgn(c) == 0) {
            if (points.empty())
                ++poly.zero_root_multiplicity;
            continue;
        }
        points.push_back({static_cast<long>(i), vp(c, p).value()});
    }

    std::vector<Point> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    for (std::size_t k = 1; k < hull.size(); ++k) {
        long dx = hull[k].x - hull[k - 1].x;
        long dy = hull[k].y - hull[k - 1].y;
        Rational slope(dy, dx);
        slope.canonicalize();
        poly.segments.push_back({slope, static_cast<std::size_t>(dx)});
    }
    return poly;
}

RootValuationMultiset root_valuations(const MonicPolynomial& f, Prime p) {
    NewtonPolygon poly = newton_polygon(f, p);
    RootValuationMultiset roots;
    roots.zero_roots = poly.zero_root_multiplicity;
    for (const auto& seg : poly.segments)
        roots.finite.push_back({Rational(-seg.slope), seg.length});
    return roots;
}

std::uint64_t expanding_exponent(const MonicPolynomial& f, Prime p) {
    std::uint64_t m = 0;
    for (const auto& seg : newton_polygon(f, p).segments) {
        if (sgn(seg.slope) <= 0)
            continue;
        Rational rise = seg.slope * static_cast<unsigned long>(seg.length);
        if (rise.get_den() != 1)
            throw std::logic_error("Newton polygon segment with non-integral rise");
        m += rise.get_num().get_ui();
    }
    return m;
}

EntropyValue yuzvinski_entropy(const RationalMatrix& a, Prime p) {
    if (!a.is_square())
        throw ValidationError("yuzvinski_entropy: matrix is not square");
    return EntropyValue(p, expanding_exponent(charpoly(a), p));
}

Integer yuzvinski_scale(const RationalMatrix& a, Prime p) {
    if (!a.is_square())
        throw ValidationError("yuzvinski_scale: matrix is not square");
    return ppow_int(p, expanding_exponent(charpoly(a), p));
}

} // namespace padent
