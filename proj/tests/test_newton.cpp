#include <doctest.h>

#include "padent/newton.hpp"
#include "support/corpus.hpp"

using namespace padent;
using testing::Rng;

namespace {

const Prime p2{2}, p3{3}, p5{5};

Rational q(const char* s) { return parse_rational(s); }

Rational valuation_sum(const RootValuationMultiset& r) {
    Rational s = 0;
    for (const auto& rv : r.finite)
        s += rv.valuation * static_cast<unsigned long>(rv.multiplicity);
    return s;
}

} // namespace

TEST_CASE("Newton polygons") {
    CHECK(newton_polygon(parse_monic_polynomial("X - 1/3"), p3).segments == std::vector<NewtonSegment>{{1, 1}});
    NewtonPolygon two = newton_polygon(parse_monic_polynomial("X^2 - 10/3*X + 1"), p3);
    CHECK(two.segments == std::vector<NewtonSegment>{{-1, 1}, {1, 1}});
    NewtonPolygon zero = newton_polygon(parse_monic_polynomial("X^2"), p5);
    CHECK(zero.segments.empty());
    CHECK(zero.zero_root_multiplicity == 2);
    NewtonPolygon mixed = newton_polygon(parse_monic_polynomial("X^3 - 1/3*X"), p3);
    CHECK(mixed.zero_root_multiplicity == 1);
    CHECK(mixed.segments == std::vector<NewtonSegment>{{q("1/2"), 2}});
}

TEST_CASE("root valuations") {
    CHECK(root_valuations(parse_monic_polynomial("X - 3"), p3).finite == std::vector<RootValuation>{{1, 1}});
    CHECK(root_valuations(parse_monic_polynomial("X^2 - 10/3X + 1"), p3).finite ==
          std::vector<RootValuation>{{1, 1}, {-1, 1}});
    CHECK(root_valuations(parse_monic_polynomial("X^2 - 1/3"), p3).finite ==
          std::vector<RootValuation>{{q("-1/2"), 2}});
    RootValuationMultiset r = root_valuations(parse_monic_polynomial("X^4 - 2X^3"), p2);
    CHECK(r.zero_roots == 3);
    CHECK(r.size() == 4);
}

TEST_CASE("root valuations of products of known roots") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
        std::vector<Rational> roots;
        std::map<Rational, std::size_t> expected;
        for (std::size_t k = 0; k < n; ++k) {
            long e = testing::uniform(rng, -3, 3);
            Rational root = ppow(p3, e) * Rational(testing::uniform(rng, 1, 2) == 1 ? 1 : 2);
            roots.push_back(root);
            ++expected[Rational(e)];
        }
        RootValuationMultiset r = root_valuations(MonicPolynomial::from_roots(roots), p3);
        std::map<Rational, std::size_t> got;
        for (const auto& rv : r.finite)
            got[rv.valuation] += rv.multiplicity;
        CHECK(got == expected);
    }
}

TEST_CASE("valuations sum to the valuation of the constant term") {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
        RationalMatrix a = testing::random_invertible(rng, n, 27);
        MonicPolynomial f = charpoly(a);
        RootValuationMultiset r = root_valuations(f, p3);
        CHECK(r.size() == n);
        CHECK(valuation_sum(r) == Rational(vp(f.coefficient(0), p3).value()));
        NewtonPolygon poly = newton_polygon(f, p3);
        std::size_t len = 0;
        for (std::size_t s = 0; s < poly.segments.size(); ++s) {
            len += poly.segments[s].length;
            CHECK(Rational(poly.segments[s].slope * static_cast<unsigned long>(poly.segments[s].length)).get_den() == 1);
            if (s > 0)
                CHECK(poly.segments[s - 1].slope < poly.segments[s].slope);
        }
        CHECK(len + poly.zero_root_multiplicity == n);
    }
}

TEST_CASE("Yuzvinski entropy and scale") {
    for (Prime p : {p2, p3, p5})
        for (std::size_t n = 1; n <= 4; ++n) {
            RationalMatrix a = RationalMatrix::identity(n) * ppow(p, -1);
            CHECK(yuzvinski_entropy(a, p) == EntropyValue(p, n));
            CHECK(yuzvinski_scale(a, p) == ppow_int(p, n));
        }
    RationalMatrix c = companion(parse_monic_polynomial("X^2 - 1/3"));
    CHECK(yuzvinski_entropy(c, p3) == EntropyValue(p3, 1));
    CHECK(yuzvinski_scale(c, p3) == 3);
    CHECK(yuzvinski_scale(RationalMatrix::identity(3), p3) == 1);
    CHECK(yuzvinski_entropy(RationalMatrix{{2, q("5/7")}, {1, 4}}, p3).is_zero());
    CHECK(yuzvinski_entropy(RationalMatrix::diagonal({q("1/3"), 3}), p3) == EntropyValue(p3, 1));
    CHECK(yuzvinski_entropy(RationalMatrix(0, 0), p3).is_zero());
    CHECK(expanding_exponent(parse_monic_polynomial("X^2 - 10/3X + 1"), p3) == 1);
}

TEST_CASE("Yuzvinski entropy properties") {
    Rng rng(9);
    for (int i = 0; i < 120; ++i) {
        Prime p = std::array{p2, p3, p5}[static_cast<std::size_t>(i % 3)];
        std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        RationalMatrix a = testing::random_matrix(rng, n, n, testing::cube(p.value()));
        EntropyValue h = yuzvinski_entropy(a, p);
        CHECK(ppow_int(p, h.exponent(p)) == yuzvinski_scale(a, p));

        RationalMatrix s = testing::random_invertible(rng, n, 9);
        CHECK(yuzvinski_entropy(s * a * inverse(s), p) == h);

        std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
        RationalMatrix a2 = testing::random_matrix(rng, m, m, testing::cube(p.value()));
        RationalMatrix b = testing::random_matrix(rng, m, n, 27);
        CHECK(yuzvinski_entropy(RationalMatrix::block_lower(a, b, a2), p) == h + yuzvinski_entropy(a2, p));

        RationalMatrix pint = testing::random_p_integral_matrix(rng, p, n, 30);
        CHECK(yuzvinski_entropy(pint, p).is_zero());
    }
}

TEST_CASE("zero eigenvalues contribute nothing") {
    // [[1/3, 0], [0, 0]] restricted to its coimage is [1/3].
    CHECK(yuzvinski_entropy(RationalMatrix{{q("1/3"), 0}, {0, 0}}, p3) == EntropyValue(p3, 1));
    CHECK(yuzvinski_entropy(RationalMatrix{{0, 1}, {0, 0}}, p3).is_zero());
    RationalMatrix rank_one{{q("1/9"), q("1/9")}, {q("1/9"), q("1/9")}}; // eigenvalues 0, 2/9
    CHECK(yuzvinski_entropy(rank_one, p3) == EntropyValue(p3, 2));
}
