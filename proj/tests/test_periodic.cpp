#include <doctest.h>

#include <algorithm>

#include "padent/errors.hpp"
#include "padent/periodic.hpp"
#include "support/corpus.hpp"

using namespace padent;
using testing::Rng;
using C = Component;

namespace {

const Prime p2{2}, p3{3}, p5{5}, p7{7};

BlockEndomorphism scalar_on_qp(Prime p, std::size_t n, const Rational& c) {
    FiniteRankPGroup g(p, 0, n);
    BlockEndomorphism phi(g);
    phi.set_block(C::Qp, C::Qp, RationalMatrix::identity(n) * c);
    return phi;
}

BlockEndomorphism random_qp_endo(Rng& rng, Prime p) {
    std::size_t n1 = static_cast<std::size_t>(testing::uniform(rng, 0, 2));
    std::size_t n2 = static_cast<std::size_t>(testing::uniform(rng, 0, 2));
    FiniteRankPGroup g(p, n1, n2, 1, {2});
    BlockEndomorphism phi = BlockEndomorphism::identity(g);
    RationalMatrix zz(n1, n1);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            zz(i, j) = testing::random_p_integral(rng, p, 20);
    phi.set_block(C::Zp, C::Zp, zz);
    phi.set_block(C::Qp, C::Zp, testing::random_matrix(rng, n2, n1, testing::cube(p.value())));
    phi.set_block(C::Qp, C::Qp, testing::random_matrix(rng, n2, n2, testing::cube(p.value())));
    return phi;
}

} // namespace

TEST_CASE("periodic entropy examples") {
    PeriodicEndomorphism phi;
    phi.add_component(scalar_on_qp(p2, 1, Rational(1, 2)));
    phi.add_component(scalar_on_qp(p3, 1, Rational(1, 3)));
    EntropyValue expected = EntropyValue(p2, 1) + EntropyValue(p3, 1);
    CHECK(entropy(phi) == expected);
    CHECK(to_string(entropy(phi)) == "log 2 + log 3");

    PeriodicEndomorphism torsion_free_compact;
    torsion_free_compact.add_component(BlockEndomorphism::identity(FiniteRankPGroup(p2, 2, 0, 1)));
    torsion_free_compact.add_component(BlockEndomorphism(FiniteRankPGroup(p7, 1, 0, 0, {3})));
    CHECK(entropy(torsion_free_compact).is_zero());

    CHECK(entropy(PeriodicEndomorphism{}).is_zero());
}

TEST_CASE("periodic structure checks") {
    PeriodicGroup g;
    g.add_component(FiniteRankPGroup(p3, 1));
    CHECK_THROWS_AS(g.add_component(FiniteRankPGroup(p3, 0, 1)), ValidationError);

    PeriodicEndomorphism phi;
    phi.add_component(BlockEndomorphism::identity(FiniteRankPGroup(p3, 1)));
    CHECK_NOTHROW(phi.require_valid_for(g));
    CHECK(phi.group() == g);
    CHECK_THROWS_AS(phi.add_component(BlockEndomorphism::identity(FiniteRankPGroup(p3, 1))), ValidationError);

    PeriodicGroup other;
    other.add_component(FiniteRankPGroup(p5, 1));
    CHECK_THROWS_AS(phi.require_valid_for(other), ValidationError);

    PeriodicGroup bigger;
    bigger.add_component(FiniteRankPGroup(p3, 2));
    CHECK_THROWS_AS(phi.require_valid_for(bigger), ValidationError);
}

TEST_CASE("periodic classification") {
    PeriodicGroup compact;
    compact.add_component(FiniteRankPGroup(p2, 1));
    compact.add_component(FiniteRankPGroup(p3, 1, 0, 0, {1, 2}));
    CHECK(classify(compact) == EntropyClass::E0);

    PeriodicGroup with_qp;
    with_qp.add_component(FiniteRankPGroup(p5, 1, 1));
    CHECK(classify(with_qp) == EntropyClass::EFiniteNotE0);

    CHECK(classify(PeriodicGroup{}) == EntropyClass::E0);
}

TEST_CASE("entropy does not depend on insertion order and splits by prime") {
    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        std::vector<BlockEndomorphism> parts;
        for (Prime p : {p2, p3, p5})
            parts.push_back(random_qp_endo(rng, p));
        PeriodicEndomorphism forward, backward;
        for (const auto& f : parts)
            forward.add_component(f);
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            backward.add_component(*it);
        CHECK(entropy(forward) == entropy(backward));

        EntropyValue sum;
        for (const auto& f : parts) {
            PeriodicEndomorphism single;
            single.add_component(f);
            CHECK(entropy(single) == entropy(f));
            sum += entropy(f);
        }
        CHECK(entropy(forward) == sum);
    }
}

TEST_CASE("classification matches sampled entropy") {
    Rng rng(18);
    for (int i = 0; i < 20; ++i) {
        PeriodicEndomorphism phi;
        bool any_qp = false;
        for (Prime p : {p2, p3, p5}) {
            BlockEndomorphism f = random_qp_endo(rng, p);
            any_qp = any_qp || f.group().n2 > 0;
            phi.add_component(f);
        }
        PeriodicGroup g = phi.group();
        CHECK((classify(g) == EntropyClass::E0) == !any_qp);
        if (classify(g) == EntropyClass::E0)
            CHECK(entropy(phi).is_zero());
    }
}
