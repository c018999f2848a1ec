#include "padent/lattice.hpp"

#include <optional>

#include "padent/errors.hpp"

namespace padent {

namespace {

void axpy(RationalVector& y, const Rational& a, const RationalVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] -= a * x[i];
}

bool is_zero_vector(const RationalVector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

void require_compatible(const Lattice& a, const Lattice& b) {
    if (a.prime() != b.prime())
        throw ValidationError("lattices over different primes");
    if (a.dim() != b.dim())
        throw ValidationError("lattices of different dimension");
}

} // namespace

EchelonForm column_echelon(Prime p, const RationalMatrix& generators) {
    const std::size_t n = generators.rows();
    std::vector<RationalVector> cols;
    cols.reserve(generators.cols());
    for (std::size_t c = 0; c < generators.cols(); ++c) {
        auto v = generators.column(c);
        if (!is_zero_vector(v))
            cols.push_back(std::move(v));
    }

    EchelonForm out;
    std::vector<long> pivot_exps;
    std::size_t piv = 0;
    for (std::size_t r = 0; r < n && piv < cols.size(); ++r) {
        std::optional<std::size_t> best;
        long best_v = 0;
        for (std::size_t k = piv; k < cols.size(); ++k) {
            if (sgn(cols[k][r]) == 0)
                continue;
            long v = vp(cols[k][r], p).value();
            if (!best || v < best_v) {
                best = k;
                best_v = v;
            }
        }
        if (!best)
            continue;
        std::swap(cols[piv], cols[*best]);
        const Rational pe = ppow(p, best_v);
        Rational unit = pe / cols[piv][r];
        for (auto& x : cols[piv])
            x *= unit;
        for (std::size_t k = piv + 1; k < cols.size(); ++k) {
            if (sgn(cols[k][r]) == 0)
                continue;
            Rational f = cols[k][r] / pe;
            axpy(cols[k], f, cols[piv]);
        }
        out.pivot_rows.push_back(r);
        pivot_exps.push_back(best_v);
        ++piv;
    }
    cols.resize(piv);

    // Reduce each column's entries in later pivot rows modulo that pivot.
    for (std::size_t j = 0; j < piv; ++j) {
        for (std::size_t q = j + 1; q < piv; ++q) {
            const std::size_t row = out.pivot_rows[q];
            const Rational& entry = cols[j][row];
            if (sgn(entry) == 0)
                continue;
            Rational target = reduce_mod_ppower(entry, p, pivot_exps[q]);
            if (target == entry)
                continue;
            Rational f = (entry - target) / ppow(p, pivot_exps[q]);
            axpy(cols[j], f, cols[q]);
        }
    }
    out.generators = RationalMatrix::from_columns(cols, n);
    return out;
}

Lattice lattice_canonicalize(Prime p, const RationalMatrix& generators) {
    EchelonForm e = column_echelon(p, generators);
    if (e.rank() != generators.rows())
        throw ValidationError("lattice generators are rank deficient (rank " + std::to_string(e.rank()) +
                              " < " + std::to_string(generators.rows()) + ")");
    return Lattice(p, std::move(e.generators));
}

Lattice Lattice::standard(Prime p, std::size_t dim) {
    return lattice_canonicalize(p, RationalMatrix::identity(dim));
}

Lattice Lattice::diagonal(Prime p, const std::vector<long>& exponents) {
    RationalVector d;
    d.reserve(exponents.size());
    for (long e : exponents)
        d.push_back(ppow(p, e));
    return lattice_canonicalize(p, RationalMatrix::diagonal(d));
}

std::vector<long> Lattice::diagonal_exponents() const {
    std::vector<long> e(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        e[i] = vp(basis_(i, i), p_).value();
    return e;
}

long Lattice::log_covolume() const {
    long s = 0;
    for (long e : diagonal_exponents())
        s += e;
    return s;
}

bool Lattice::contains(const RationalVector& x) const {
    if (x.size() != dim())
        throw ValidationError("vector dimension does not match lattice");
    // Forward substitution on the lower-triangular basis.
    RationalVector rest = x;
    for (std::size_t j = 0; j < dim(); ++j) {
        Rational c = rest[j] / basis_(j, j);
        if (!is_p_integral(c, p_))
            return false;
        for (std::size_t i = j + 1; i < dim(); ++i)
            rest[i] -= c * basis_(i, j);
    }
    return true;
}

bool Lattice::contains(const Lattice& other) const {
    require_compatible(*this, other);
    for (std::size_t c = 0; c < other.dim(); ++c)
        if (!contains(other.basis_.column(c)))
            return false;
    return true;
}

Lattice Lattice::scaled(long k) const { return lattice_canonicalize(p_, basis_ * ppow(p_, k)); }

long lattice_log_index(const Lattice& big, const Lattice& small) {
    require_compatible(big, small);
    if (!big.contains(small))
        throw ValidationError("lattice index: second lattice is not contained in the first");
    return small.log_covolume() - big.log_covolume();
}

Integer lattice_index(const Lattice& big, const Lattice& small) {
    return ppow_int(big.prime(), static_cast<unsigned long>(lattice_log_index(big, small)));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    require_compatible(a, b);
    return lattice_canonicalize(a.prime(), RationalMatrix::hstack(a.basis(), b.basis()));
}

Lattice integral_preimage_lattice(Prime p, const RationalMatrix& m) {
    // The defining functionals (rows of M) span a full-rank Z_(p)-module W;
    // the solution set is its dual (W^T)^{-1} Z_(p)^n.
    EchelonForm w = column_echelon(p, m.transpose());
    if (w.rank() != m.cols())
        throw ValidationError("integral preimage: constraint matrix lacks full column rank");
    return lattice_canonicalize(p, inverse(w.generators.transpose()));
}

} // namespace padent
