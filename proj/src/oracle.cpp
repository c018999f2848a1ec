#include "padent/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "padent/errors.hpp"
#include "padent/newton.hpp"

namespace padent {

namespace {

void require_square_of_dim(const RationalMatrix& a, std::size_t dim) {
    if (!a.is_square())
        throw ValidationError("endomorphism matrix is not square");
    if (a.rows() != dim)
        throw ValidationError("matrix dimension " + std::to_string(a.rows()) + " does not match lattice dimension " +
                              std::to_string(dim));
}

long pivot_log_covolume(const EchelonForm& e, Prime p) {
    long s = 0;
    for (std::size_t j = 0; j < e.rank(); ++j)
        s += vp(e.generators(e.pivot_rows[j], j), p).value();
    return s;
}


// Advances seq until its index increments stabilize; seq is left at the
// cotrajectory where detection happened.
void settle(CotrajectorySequence& seq, LimitDiagnostics& diagnostics) {
    long previous = seq.log_index();
    while (seq.step() < diagnostics.cap) {
        seq.advance();
        long current = seq.log_index();
        long d = current - previous;
        previous = current;
        if (d < 0)
            throw std::logic_error("cotrajectory grew; index sequence must be monotone");
        if (diagnostics.push(d))
            return;
    }
    throw StabilizationError("cotrajectory increments did not stabilize within cap " +
                                 std::to_string(diagnostics.cap),
                             std::move(diagnostics));
}

} // namespace

CotrajectorySequence::CotrajectorySequence(const RationalMatrix& a, const Lattice& base)
    : p_(base.prime()), a_transpose_(a.transpose()), base_log_covolume_(base.log_covolume()) {
    require_square_of_dim(a, base.dim());
    base_functionals_ = inverse(base.basis()).transpose();
    functionals_ = column_echelon(p_, base_functionals_);
}

long CotrajectorySequence::log_index() const {
    // covol(C_n) = -covol(W_n) since C_n = (W_n^T)^{-1} Z_(p)^n.
    return -pivot_log_covolume(functionals_, p_) - base_log_covolume_;
}

Lattice CotrajectorySequence::current() const {
    return lattice_canonicalize(p_, inverse(functionals_.generators.transpose()));
}

void CotrajectorySequence::advance() {
    RationalMatrix pulled = a_transpose_ * functionals_.generators;
    functionals_ = column_echelon(p_, RationalMatrix::hstack(base_functionals_, pulled));
    ++step_;
}

Lattice cotrajectory(const RationalMatrix& a, const Lattice& base, std::size_t n) {
    if (n == 0)
        throw ValidationError("cotrajectory index must be at least 1");
    CotrajectorySequence seq(a, base);
    while (seq.step() < n)
        seq.advance();
    return seq.current();
}

OracleResult htop_oracle_at(const RationalMatrix& a, const Lattice& base, std::size_t window, std::size_t cap) {
    require_limit_parameters(window, cap);
    require_square_of_dim(a, base.dim());
    OracleResult out;
    out.diagnostics.window = window;
    out.diagnostics.cap = cap;
    if (base.dim() == 0) {
        out.diagnostics.stabilized_at = 0;
        return out;
    }
    CotrajectorySequence seq(a, base);
    settle(seq, out.diagnostics);
    out.entropy = EntropyValue(base.prime(), static_cast<std::uint64_t>(out.diagnostics.limit()));
    return out;
}

OracleResult htop_oracle(const RationalMatrix& a, Prime p, std::size_t window, std::size_t cap) {
    if (!a.is_square())
        throw ValidationError("endomorphism matrix is not square");
    return htop_oracle_at(a, Lattice::standard(p, a.rows()), window, cap);
}

ScaleOracleResult moeller_scale_oracle(const RationalMatrix& a, Prime p, const Lattice& base, std::size_t window,
                                       std::size_t cap) {
    require_limit_parameters(window, cap);
    require_square_of_dim(a, base.dim());
    if (base.prime() != p)
        throw ValidationError("base lattice prime does not match p");
    ScaleOracleResult out;
    out.diagnostics.window = window;
    out.diagnostics.cap = cap;
    // Bounded parts of U + A^n U can cycle, so increments are only eventually periodic.
    out.diagnostics.max_period = std::max<std::size_t>(1, cap / window);
    if (base.dim() == 0) {
        out.scale = 1;
        out.diagnostics.stabilized_at = 0;
        return out;
    }
    const long base_cov = base.log_covolume();
    // Generators of the (possibly rank-deficient) module A^n U, kept in echelon form.
    EchelonForm image{base.basis(), {}};
    long previous = 0;
    for (std::size_t n = 1; n <= cap; ++n) {
        image = column_echelon(p, a * image.generators);
        Lattice sum = lattice_canonicalize(p, RationalMatrix::hstack(base.basis(), image.generators));
        long e = base_cov - sum.log_covolume();
        long d = e - previous;
        previous = e;
        if (out.diagnostics.push(d)) {
            long limit = out.diagnostics.limit();
            if (limit < 0)
                throw std::logic_error("Moeller increments stabilized at a negative value");
            out.exponent = limit;
            out.scale = ppow_int(p, static_cast<unsigned long>(limit));
            return out;
        }
    }
    throw StabilizationError("Moeller increments did not stabilize within cap " + std::to_string(cap),
                             std::move(out.diagnostics));
}

ScaleOracleResult moeller_scale_oracle(const RationalMatrix& a, Prime p, std::size_t window, std::size_t cap) {
    require_limit_parameters(window, cap);
    if (!a.is_square())
        throw ValidationError("endomorphism matrix is not square");
    if (a.rows() == 0)
        return moeller_scale_oracle(a, p, Lattice::standard(p, 0), window, cap);
    // On Z^n itself, directions with unit eigenvalues can make U + A^n U
    // oscillate with v_p(n), which never settles. A settled cotrajectory is
    // carried into itself along those directions, so it is used as the base.
    CotrajectorySequence seq(a, Lattice::standard(p, a.rows()));
    LimitDiagnostics pre;
    pre.window = window;
    pre.cap = cap;
    settle(seq, pre);
    ScaleOracleResult out = moeller_scale_oracle(a, p, seq.current(), window, cap);
    out.base_step = seq.step();
    return out;
}

long displacement_exponent(const RationalMatrix& a, const Lattice& u) {
    require_square_of_dim(a, u.dim());
    Lattice sum = lattice_canonicalize(u.prime(), RationalMatrix::hstack(u.basis(), a * u.basis()));
    return u.log_covolume() - sum.log_covolume();
}

MinScaleResult min_scale_search(const RationalMatrix& a, Prime p, long k_min, long k_max) {
    if (!a.is_square())
        throw ValidationError("endomorphism matrix is not square");
    if (k_min > k_max)
        throw ValidationError("empty exponent range");
    if (sgn(determinant(a)) == 0)
        throw ValidationError("min_scale_search requires an invertible matrix");
    const std::size_t n = a.rows();

    // Frames whose columns get rescaled: the standard basis and, when it
    // settles, the basis of a cotrajectory of Z^n.
    std::vector<std::pair<RationalMatrix, bool>> frames{{RationalMatrix::identity(n), false}};
    if (n > 0) {
        CotrajectorySequence seq(a, Lattice::standard(p, n));
        LimitDiagnostics pre;
        try {
            settle(seq, pre);
            frames.emplace_back(seq.current().basis(), true);
        } catch (const StabilizationError&) {
        }
    }

    std::optional<MinScaleResult> best;
    std::size_t evaluated = 0;
    for (const auto& [frame, from_cotrajectory] : frames) {
        std::vector<long> exps(n, k_min);
        while (true) {
            RationalVector scales(n);
            for (std::size_t i = 0; i < n; ++i)
                scales[i] = ppow(p, exps[i]);
            Lattice u = lattice_canonicalize(p, frame * RationalMatrix::diagonal(scales));
            long e = displacement_exponent(a, u);
            ++evaluated;
            if (!best || e < best->best_exponent)
                best = MinScaleResult{ppow_int(p, static_cast<unsigned long>(e)), e, u, 0, from_cotrajectory};
            std::size_t i = 0;
            while (i < n && exps[i] == k_max) {
                exps[i] = k_min;
                ++i;
            }
            if (i == n)
                break;
            ++exps[i];
        }
    }
    best->evaluated = evaluated;
    return *best;
}

AdditionReport check_addition_qpn(const RationalMatrix& a1, const RationalMatrix& b, const RationalMatrix& a2,
                                  Prime p, std::size_t window, std::size_t cap) {
    AdditionReport report{RationalMatrix::block_lower(a1, b, a2), {}, {}};
    report.formula.whole = yuzvinski_entropy(report.assembled, p);
    report.formula.subgroup = yuzvinski_entropy(a2, p);
    report.formula.quotient = yuzvinski_entropy(a1, p);
    report.oracle.whole = htop_oracle(report.assembled, p, window, cap).entropy;
    report.oracle.subgroup = htop_oracle(a2, p, window, cap).entropy;
    report.oracle.quotient = htop_oracle(a1, p, window, cap).entropy;
    return report;
}

} // namespace padent
