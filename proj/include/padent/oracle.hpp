#pragma once

#include <cstddef>
#include <optional>

#include "padent/entropy_value.hpp"
#include "padent/lattice.hpp"
#include "padent/limit.hpp"
#include "padent/matrix.hpp"

namespace padent {

inline constexpr std::size_t kDefaultWindow = 5;
inline constexpr std::size_t kDefaultCap = 40;

// Successive cotrajectories C_n(A, U) = {x : A^j x in U, 0 <= j < n}.
//
// C_n is the dual of the Z_(p)-module of functionals W_n spanned by the rows
// of B_U^{-1} A^j, j < n. The recursion W_{n+1} = W_1 + A^T W_n keeps every
// step a small echelon computation, and never inverts A.
class CotrajectorySequence {
public:
    CotrajectorySequence(const RationalMatrix& a, const Lattice& base);

    std::size_t step() const noexcept { return step_; } // n of the current C_n
    long log_index() const;                             // log_p [U : C_n]
    Lattice current() const;                            // C_n
    void advance();

private:
    Prime p_;
    RationalMatrix a_transpose_;
    RationalMatrix base_functionals_;
    EchelonForm functionals_;
    long base_log_covolume_;
    std::size_t step_ = 1;
};

// C_n(A, U) for n >= 1. A may be singular.
Lattice cotrajectory(const RationalMatrix& a, const Lattice& base, std::size_t n);

struct OracleResult {
    EntropyValue entropy;
    LimitDiagnostics diagnostics;
};

// Stabilized increment of log_p [U : C_n(A, U)] at a chosen base lattice.
// Throws StabilizationError if the increments are not constant over `window`
// consecutive steps before C_cap.
OracleResult htop_oracle_at(const RationalMatrix& a, const Lattice& base, std::size_t window = kDefaultWindow,
                            std::size_t cap = kDefaultCap);

// Cotrajectory entropy of x -> A x on Q_p^n, evaluated at U = Z_(p)^n.
OracleResult htop_oracle(const RationalMatrix& a, Prime p, std::size_t window = kDefaultWindow,
                         std::size_t cap = kDefaultCap);

struct ScaleOracleResult {
    Integer scale;
    long exponent = 0; // scale = p^exponent
    std::size_t base_step = 0; // n of the cotrajectory C_n(A, Z^n) used as base; 0 for a caller-supplied base
    LimitDiagnostics diagnostics;
};

// Moeller's limit: the stabilized increment of e_n = log_p [U + A^n U : U],
// averaged over one period when the increments repeat with period > 1.
ScaleOracleResult moeller_scale_oracle(const RationalMatrix& a, Prime p, const Lattice& base,
                                       std::size_t window = kDefaultWindow, std::size_t cap = kDefaultCap);
// Same limit, with U a settled cotrajectory of Z^n.
ScaleOracleResult moeller_scale_oracle(const RationalMatrix& a, Prime p, std::size_t window = kDefaultWindow,
                                       std::size_t cap = kDefaultCap);

// log_p [A(U) : A(U) cap U], computed as log_p [A(U) + U : U].
long displacement_exponent(const RationalMatrix& a, const Lattice& u);

struct MinScaleResult {
    Integer best_index;
    long best_exponent = 0;
    Lattice witness;
    std::size_t evaluated = 0;
    bool cotrajectory_frame = false; // witness was found in the cotrajectory frame
};

// Minimizes [A(U) : A(U) cap U] over U = F diag(p^k_1, ..., p^k_n) Z_(p)^n with
// every k_i in [k_min, k_max], where F is the identity or the basis of a
// settled cotrajectory C_m(A, Z^n). Gives an upper bound for s(A) and a
// witness. A must be invertible.
MinScaleResult min_scale_search(const RationalMatrix& a, Prime p, long k_min, long k_max);

struct EntropyTriple {
    EntropyValue whole;
    EntropyValue subgroup; // restriction to the invariant block (A2)
    EntropyValue quotient; // induced map on the quotient (A1)

    bool additive() const { return whole == subgroup + quotient; }
};

struct AdditionReport {
    RationalMatrix assembled;
    EntropyTriple formula;
    EntropyTriple oracle;

    bool paths_agree() const {
        return formula.whole == oracle.whole && formula.subgroup == oracle.subgroup &&
               formula.quotient == oracle.quotient;
    }
    bool holds() const { return formula.additive() && oracle.additive() && paths_agree(); }
};

// A = [[A1, 0], [B, A2]] on Q_p^(n1+n2), with Q_p^n2 the A-invariant subspace.
AdditionReport check_addition_qpn(const RationalMatrix& a1, const RationalMatrix& b, const RationalMatrix& a2,
                                  Prime p, std::size_t window = kDefaultWindow, std::size_t cap = kDefaultCap);

} // namespace padent
