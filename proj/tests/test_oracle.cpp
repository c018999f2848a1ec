#include <doctest.h>

#include "padent/errors.hpp"
#include "padent/newton.hpp"
#include "padent/oracle.hpp"
#include "support/corpus.hpp"

using namespace padent;
using testing::Rng;

namespace {

const Prime p2{2}, p3{3}, p5{5};

Rational q(const char* s) { return parse_rational(s); }

RationalMatrix stacked_powers(const RationalMatrix& a, std::size_t n) {
    RationalMatrix m = RationalMatrix::identity(a.rows());
    RationalMatrix power = RationalMatrix::identity(a.rows());
    for (std::size_t k = 1; k < n; ++k) {
        power = a * power;
        m = RationalMatrix::vstack(m, power);
    }
    return m;
}

} // namespace

TEST_CASE("limit detection") {
    LimitDiagnostics d;
    d.window = 3;
    d.cap = 10;
    CHECK_FALSE(d.push(0));
    CHECK_FALSE(d.push(2));
    CHECK_FALSE(d.push(1));
    CHECK_FALSE(d.push(1));
    CHECK(d.push(1));
    CHECK(*d.stabilized_at == 3);
    CHECK(d.limit() == 1);
    CHECK_THROWS(require_limit_parameters(0, 10));
    CHECK_THROWS(require_limit_parameters(5, 5));
    CHECK_NOTHROW(require_limit_parameters(5, 6));
}

TEST_CASE("cotrajectories") {
    RationalMatrix integral{{1, 2}, {q("3/5"), 7}};
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(cotrajectory(integral, Lattice::standard(p3, 2), n) == Lattice::standard(p3, 2));
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(cotrajectory(RationalMatrix{{q("1/3")}}, Lattice::standard(p3, 1), n) ==
              Lattice::diagonal(p3, {static_cast<long>(n) - 1}));
    Lattice u = Lattice::diagonal(p5, {1, -1});
    CHECK(cotrajectory(RationalMatrix{{q("1/5"), 1}, {0, 25}}, u, 1) == u);
    CHECK_THROWS(cotrajectory(integral, Lattice::standard(p3, 2), 0));
}

TEST_CASE("incremental cotrajectories match the stacked integral preimage") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        Prime p = std::array{p2, p3, p5}[static_cast<std::size_t>(i % 3)];
        std::size_t dim = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        RationalMatrix a = testing::random_matrix(rng, dim, dim, testing::cube(p.value()));
        CotrajectorySequence seq(a, Lattice::standard(p, dim));
        for (std::size_t n = 1; n <= 6; ++n) {
            REQUIRE(seq.step() == n);
            Lattice expected = integral_preimage_lattice(p, stacked_powers(a, n));
            CHECK(seq.current() == expected);
            CHECK(seq.log_index() == lattice_log_index(Lattice::standard(p, dim), expected));
            seq.advance();
        }
    }
}

TEST_CASE("oracle entropy examples") {
    for (Prime p : {p2, p3, p5})
        for (std::size_t n = 1; n <= 3; ++n) {
            OracleResult r = htop_oracle(RationalMatrix::identity(n) * ppow(p, -1), p);
            CHECK(r.entropy == EntropyValue(p, n));
            for (long d : r.diagnostics.increments)
                CHECK(d == static_cast<long>(n));
        }
    OracleResult integral = htop_oracle(RationalMatrix{{4, 1}, {q("2/7"), 0}}, p3);
    CHECK(integral.entropy.is_zero());
    for (long d : integral.diagnostics.increments)
        CHECK(d == 0);
    CHECK(htop_oracle(companion(parse_monic_polynomial("X^2 - 1/3")), p3).entropy == EntropyValue(p3, 1));
    CHECK(htop_oracle(RationalMatrix(0, 0), p3).entropy.is_zero());
}

TEST_CASE("oracle refuses to extrapolate past the cap") {
    // Nilpotent shift with large entries: increments 20, 10, 0, 0, ...
    Rational big = ppow(p3, -10);
    RationalMatrix a{{0, 0, 0}, {big, 0, 0}, {0, big, 0}};
    try {
        (void)htop_oracle(a, p3, 3, 4);
        FAIL("expected StabilizationError");
    } catch (const StabilizationError& e) {
        // The cap bounds the cotrajectory index, so cap 4 yields 3 increments.
        CHECK(e.diagnostics().increments.size() == 3);
        CHECK_FALSE(e.diagnostics().stabilized_at.has_value());
    }
    OracleResult r = htop_oracle(a, p3);
    CHECK(r.entropy.is_zero());
    CHECK(r.diagnostics.stabilized_at.has_value());
    CHECK_THROWS_AS(htop_oracle(a, p3, 5, 5), ValidationError);
}

TEST_CASE("Moeller scale examples") {
    ScaleOracleResult one = moeller_scale_oracle(RationalMatrix{{q("1/3")}}, p3);
    CHECK(one.scale == 3);
    CHECK(one.exponent == 1);
    CHECK(moeller_scale_oracle(RationalMatrix{{2, 1}, {1, 1}}, p3).scale == 1);
    CHECK(moeller_scale_oracle(RationalMatrix::identity(2) * q("1/3"), p3).scale == 9);
    CHECK(moeller_scale_oracle(RationalMatrix::diagonal({q("1/3"), 3}), p3).scale == 3);
    CHECK(moeller_scale_oracle(RationalMatrix{{0, 0}, {q("1/9"), 0}}, p3).scale == 1);
}

TEST_CASE("Moeller increments on Z^n can cycle") {
    // Period 2 on the standard base: 1, -1, 1, -1, ...
    RationalMatrix two{{-1, q("3/2")}, {-4, -1}};
    ScaleOracleResult periodic = moeller_scale_oracle(two, p2, Lattice::standard(p2, 2));
    CHECK(periodic.scale == 1);
    CHECK(periodic.diagnostics.period == 2);

    // Here e_n depends on v_3(n) and is not periodic on Z^2.
    RationalMatrix drift{{2, q("27/10")}, {q("-8/9"), q("5/7")}};
    CHECK_THROWS_AS(moeller_scale_oracle(drift, p3, Lattice::standard(p3, 2)), StabilizationError);
    ScaleOracleResult settled = moeller_scale_oracle(drift, p3);
    CHECK(settled.scale == 1);
    CHECK(settled.diagnostics.period == 1);
    CHECK(settled.base_step > 0);
}

TEST_CASE("periodic limit detection") {
    LimitDiagnostics d;
    d.window = 3;
    d.cap = 40;
    d.max_period = 2;
    for (long x : {3L, 1L, -1L, 1L, -1L, 1L})
        CHECK_FALSE(d.push(x));
    CHECK(d.push(-1)); // three full copies of (1, -1)
    CHECK(*d.stabilized_at == 2);
    CHECK(d.period == 2);
    CHECK(d.limit() == 0);

    LimitDiagnostics odd;
    odd.window = 2;
    odd.max_period = 2;
    bool done = false;
    for (long x : {0L, 1L, 0L, 1L})
        done = odd.push(x);
    CHECK_FALSE(done); // mean 1/2 is not an integer limit
}

TEST_CASE("minimizing subgroup search") {
    MinScaleResult r = min_scale_search(RationalMatrix{{q("1/3")}}, p3, -2, 2);
    CHECK(r.best_index == 3);
    CHECK(r.evaluated == 10); // two frames, five exponents each
    CHECK(displacement_exponent(RationalMatrix{{q("1/3")}}, Lattice::standard(p3, 1)) == 1);
    CHECK(min_scale_search(RationalMatrix::diagonal({q("1/3"), 3}), p3, -1, 1).best_index == 3);
    CHECK(min_scale_search(RationalMatrix{{2, 1}, {1, 1}}, p3, 0, 0).best_index == 1);
    // Not diagonal in the standard basis: the shear needs a rescaled witness.
    MinScaleResult shear = min_scale_search(RationalMatrix{{1, 0}, {q("1/9"), 1}}, p3, -3, 3);
    CHECK(shear.best_index == 1);
    CHECK(displacement_exponent(RationalMatrix{{1, 0}, {q("1/9"), 1}}, shear.witness) == 0);
    CHECK_THROWS_AS(min_scale_search(RationalMatrix{{1, 1}, {1, 1}}, p3, 0, 1), ValidationError);

    // No diagonal rescaling of Z^3 is minimizing here; the cotrajectory frame is.
    RationalMatrix hard{{q("7/8"), q("-4/13"), q("5/11")},
                        {q("5/3"), q("-2/13"), q("-20/23")},
                        {q("-1/3"), q("-16/7"), q("-17/25")}};
    MinScaleResult found = min_scale_search(hard, p3, -3, 3);
    CHECK(found.best_index == 1);
    CHECK(found.cotrajectory_frame);
    CHECK(moeller_scale_oracle(hard, p3).scale == 1);
}

TEST_CASE("addition across block lower-triangular assemblies") {
    AdditionReport r = check_addition_qpn(RationalMatrix{{q("1/3")}}, RationalMatrix{{1}}, RationalMatrix{{3}}, p3);
    CHECK(r.holds());
    CHECK(r.formula.whole == EntropyValue(p3, 1));
    CHECK(r.formula.subgroup.is_zero());

    AdditionReport zero = check_addition_qpn(RationalMatrix::identity(1), RationalMatrix{{0}},
                                             RationalMatrix::identity(1), p3);
    CHECK(zero.holds());
    CHECK(zero.oracle.whole.is_zero());

    Rng rng(32);
    RationalMatrix b = testing::random_matrix(rng, 1, 2, 8);
    AdditionReport two = check_addition_qpn(RationalMatrix::identity(2) * q("1/2"), b, RationalMatrix{{q("1/2")}}, p2);
    CHECK(two.holds());
    CHECK(two.oracle.whole == EntropyValue(p2, 3));
    CHECK(two.oracle.quotient == EntropyValue(p2, 2));
    CHECK(two.oracle.subgroup == EntropyValue(p2, 1));
}

TEST_CASE("oracle properties on a random corpus") {
    Rng rng(33);
    for (int i = 0; i < 60; ++i) {
        Prime p = std::array{p2, p3, p5}[static_cast<std::size_t>(i % 3)];
        std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        RationalMatrix a = testing::random_matrix(rng, n, n, testing::cube(p.value()));
        EntropyValue h = htop_oracle(a, p).entropy;
        CHECK(h == yuzvinski_entropy(a, p));

        // The base lattice scale does not matter.
        for (long k = -2; k <= 2; ++k)
            CHECK(htop_oracle_at(a, Lattice::standard(p, n).scaled(k)).entropy == h);

        // Antitonicity: smaller base, no smaller increment.
        Lattice v = lattice_canonicalize(p, testing::random_invertible(rng, n, 9));
        Lattice u = lattice_canonicalize(
            p, v.basis() * testing::random_p_integral_matrix(rng, p, n, 9) + v.basis() * ppow(p, 3));
        if (rank(u.basis()) == n && v.contains(u))
            CHECK(htop_oracle_at(a, v).entropy.dominated_by(htop_oracle_at(a, u).entropy));

        ScaleOracleResult s = moeller_scale_oracle(a, p);
        CHECK(s.scale == ppow_int(p, static_cast<unsigned long>(s.exponent)));
        CHECK(EntropyValue(p, static_cast<std::uint64_t>(s.exponent)).dominated_by(h));
        CHECK(EntropyValue(p, static_cast<std::uint64_t>(s.exponent)) == h);
    }
}

TEST_CASE("restriction and quotient bounds for block lower-triangular maps") {
    Rng rng(34);
    for (int i = 0; i < 40; ++i) {
        Prime p = std::array{p2, p3, p5}[static_cast<std::size_t>(i % 3)];
        std::size_t n1 = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
        std::size_t n2 = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
        long bound = testing::cube(p.value());
        RationalMatrix a1 = testing::random_matrix(rng, n1, n1, bound);
        RationalMatrix a2 = testing::random_matrix(rng, n2, n2, bound);
        RationalMatrix b = testing::random_matrix(rng, n2, n1, bound);
        RationalMatrix a = RationalMatrix::block_lower(a1, b, a2);
        Integer whole = moeller_scale_oracle(a, p).scale;
        CHECK(whole >= moeller_scale_oracle(a1, p).scale);
        CHECK(whole >= moeller_scale_oracle(a2, p).scale);
        EntropyValue h = htop_oracle(a, p).entropy;
        CHECK(htop_oracle(a1, p).entropy.dominated_by(h));
        CHECK(htop_oracle(a2, p).entropy.dominated_by(h));
    }
}
