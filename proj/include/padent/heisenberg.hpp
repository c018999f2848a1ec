#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "padent/entropy_value.hpp"
#include "padent/group.hpp"
#include "padent/limit.hpp"
#include "padent/matrix.hpp"
#include "padent/oracle.hpp"

namespace padent {

enum class HeisenbergRing { Zp, Qp };

// M(a, b; z) = [[1, a, z], [0, 1, b], [0, 0, 1]].
struct HeisenbergElement {
    Rational a;
    Rational b;
    Rational z;

    // Membership in H(Z_p).
    bool is_integral(Prime p) const;

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

HeisenbergElement hmul(const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement hinv(const HeisenbergElement& x);
// x y x^-1 y^-1
HeisenbergElement commutator(const HeisenbergElement& x, const HeisenbergElement& y);

// M(a, b; z) -> M(s a, t b; s t z). A homomorphism for every s, t.
struct DiagonalEndo {
    Rational s;
    Rational t;

    HeisenbergElement operator()(const HeisenbergElement& x) const;
    bool is_automorphism() const { return sgn(s) != 0 && sgn(t) != 0; }
    // Restricts to an endomorphism of H(Z_p).
    bool preserves_integral(Prime p) const { return is_p_integral(s, p) && is_p_integral(t, p); }
};

// Conjugation by M(a0, b0; *): M(a, b; z) -> M(a, b; z + a0 b - b0 a).
struct InnerAuto {
    Rational a0;
    Rational b0;

    HeisenbergElement operator()(const HeisenbergElement& x) const;
    // Action on (a, b, z) coordinates.
    RationalMatrix coordinate_matrix() const;
};

// h(phi) = h(phi on Z(G) = Q_p) + h(phi on G/Z(G) = Q_p^2). Only for
// automorphisms; throws ValidationError if s or t is zero.
EntropyValue entropy_diagonal(const DiagonalEndo& phi, Prime p);

// U_k = H(p^k Z_p) is a subgroup iff k >= 0.
bool box_is_subgroup(long level);

// Exponents (alpha, beta, gamma) with C_n(phi, U_k) = p^alpha Z x p^beta Z x p^gamma Z
// in (a, b, z) coordinates.
std::array<long, 3> diagonal_cotrajectory_box(const DiagonalEndo& phi, Prime p, long level, std::size_t n);

// Cotrajectory entropy at base U_k; singular parameters allowed.
OracleResult entropy_oracle_diagonal(const DiagonalEndo& phi, Prime p, long level = 0,
                                     std::size_t window = kDefaultWindow, std::size_t cap = kDefaultCap);

// Always zero: the coordinate action is unipotent.
EntropyValue entropy_inner(const InnerAuto& iota, Prime p);

struct HeisenbergEvidence {
    DiagonalEndo phi;
    EntropyValue entropy; // cotrajectory oracle
};

struct HeisenbergClassification {
    EntropyClass classification;
    std::vector<HeisenbergEvidence> evidence;

    // Z_p: every sampled entropy vanishes. Q_p: some sampled entropy does not
    // (vacuously true for an empty sample).
    bool evidence_consistent() const;
};

// For Q_p the sample starts with the witness s = 1/p, t = 1.
HeisenbergClassification classify_heisenberg(HeisenbergRing ring, Prime p, std::size_t sample_size,
                                             std::uint64_t seed = 1);

std::string_view to_string(HeisenbergRing ring);

} // namespace padent
