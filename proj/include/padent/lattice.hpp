#pragma once

#include <cstddef>
#include <vector>

#include "padent/matrix.hpp"
#include "padent/padic.hpp"

namespace padent {

// Column echelon form of a Z_(p)-module given by generator columns. Columns
// are lower-triangular in their pivot rows, each pivot is exactly p^e, and the
// entries of a column in later pivot rows are reduced into [0, p^e) of that
// row. For a full-rank module this is the canonical basis of the lattice.
struct EchelonForm {
    RationalMatrix generators;        // rows() x rank
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const noexcept { return pivot_rows.size(); }
};

EchelonForm column_echelon(Prime p, const RationalMatrix& generators);

// A full-rank p-local lattice {B c : c in Z_(p)^n} in Q^n, i.e. a compact open
// subgroup of Q_p^n. Only constructible through lattice_canonicalize, so two
// lattices are equal iff their bases are.
class Lattice {
public:
    static Lattice standard(Prime p, std::size_t dim);
    static Lattice diagonal(Prime p, const std::vector<long>& exponents);

    Prime prime() const noexcept { return p_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const RationalMatrix& basis() const noexcept { return basis_; }

    std::vector<long> diagonal_exponents() const;
    // v_p(det basis); [L1 : L2] = p^(log_covolume(L2) - log_covolume(L1)).
    long log_covolume() const;

    bool contains(const RationalVector& x) const;
    bool contains(const Lattice& other) const;

    // p^k L
    Lattice scaled(long k) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.p_ == b.p_ && a.basis_ == b.basis_;
    }

private:
    Lattice(Prime p, RationalMatrix basis) : p_(p), basis_(std::move(basis)) {}
    friend Lattice lattice_canonicalize(Prime p, const RationalMatrix& generators);

    Prime p_;
    RationalMatrix basis_;
};

// Throws ValidationError if the generators do not span Q^n.
Lattice lattice_canonicalize(Prime p, const RationalMatrix& generators);

// [big : small]; throws ValidationError unless small is contained in big.
Integer lattice_index(const Lattice& big, const Lattice& small);
long lattice_log_index(const Lattice& big, const Lattice& small);

Lattice lattice_sum(const Lattice& a, const Lattice& b);

// {x : M x is p-integral}. M must have full column rank.
Lattice integral_preimage_lattice(Prime p, const RationalMatrix& m);

} // namespace padent
