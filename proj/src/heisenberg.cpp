#include "padent/heisenberg.hpp"

#include <algorithm>
#include <random>

#include "padent/errors.hpp"
#include "padent/newton.hpp"

namespace padent {

bool HeisenbergElement::is_integral(Prime p) const {
    return is_p_integral(a, p) && is_p_integral(b, p) && is_p_integral(z, p);
}

HeisenbergElement hmul(const HeisenbergElement& x, const HeisenbergElement& y) {
    return {x.a + y.a, x.b + y.b, x.z + y.z + x.a * y.b};
}

HeisenbergElement hinv(const HeisenbergElement& x) { return {-x.a, -x.b, -x.z + x.a * x.b}; }

HeisenbergElement commutator(const HeisenbergElement& x, const HeisenbergElement& y) {
    return hmul(hmul(x, y), hmul(hinv(x), hinv(y)));
}

HeisenbergElement DiagonalEndo::operator()(const HeisenbergElement& x) const {
    return {s * x.a, t * x.b, s * t * x.z};
}

HeisenbergElement InnerAuto::operator()(const HeisenbergElement& x) const {
    return {x.a, x.b, x.z + a0 * x.b - b0 * x.a};
}

RationalMatrix InnerAuto::coordinate_matrix() const {
    return RationalMatrix{{1, 0, 0}, {0, 1, 0}, {Rational(-b0), a0, 1}};
}

EntropyValue entropy_diagonal(const DiagonalEndo& phi, Prime p) {
    if (!phi.is_automorphism())
        throw ValidationError("center/quotient decomposition needs an automorphism (s, t nonzero)");
    EntropyValue center = yuzvinski_entropy(RationalMatrix{{phi.s * phi.t}}, p);
    EntropyValue quotient = yuzvinski_entropy(RationalMatrix::diagonal({phi.s, phi.t}), p);
    return center + quotient;
}

bool box_is_subgroup(long level) {
    // The product adds a b' to z; v(a b') >= 2k must stay >= k.
    return 2 * level >= level;
}

std::array<long, 3> diagonal_cotrajectory_box(const DiagonalEndo& phi, Prime p, long level, std::size_t n) {
    if (!box_is_subgroup(level))
        throw ValidationError("H(p^k Z_p) is not a subgroup for k < 0");
    if (n == 0)
        throw ValidationError("cotrajectory index must be at least 1");
    const Rational multipliers[3] = {phi.s, phi.t, phi.s * phi.t};
    std::array<long, 3> box{};
    for (int c = 0; c < 3; ++c) {
        // v(m^j x) >= k for all j < n; a zero multiplier only constrains j = 0.
        long need = level;
        if (sgn(multipliers[c]) != 0) {
            long v = vp(multipliers[c], p).value();
            for (std::size_t j = 1; j < n; ++j)
                need = std::max(need, level - static_cast<long>(j) * v);
        }
        box[static_cast<std::size_t>(c)] = need;
    }
    return box;
}

OracleResult entropy_oracle_diagonal(const DiagonalEndo& phi, Prime p, long level, std::size_t window,
                                     std::size_t cap) {
    require_limit_parameters(window, cap);
    OracleResult out;
    out.diagnostics.window = window;
    out.diagnostics.cap = cap;
    auto log_index = [&](std::size_t n) {
        auto box = diagonal_cotrajectory_box(phi, p, level, n);
        return (box[0] - level) + (box[1] - level) + (box[2] - level);
    };
    long previous = log_index(1);
    for (std::size_t n = 2; n <= cap; ++n) {
        long current = log_index(n);
        long d = current - previous;
        previous = current;
        if (out.diagnostics.push(d)) {
            out.entropy = EntropyValue(p, static_cast<std::uint64_t>(d));
            return out;
        }
    }
    throw StabilizationError("Heisenberg cotrajectory increments did not stabilize within cap " + std::to_string(cap),
                             std::move(out.diagnostics));
}

EntropyValue entropy_inner(const InnerAuto& iota, Prime p) { return yuzvinski_entropy(iota.coordinate_matrix(), p); }

bool HeisenbergClassification::evidence_consistent() const {
    if (classification == EntropyClass::E0)
        return std::all_of(evidence.begin(), evidence.end(), [](const auto& e) { return e.entropy.is_zero(); });
    return evidence.empty() ||
           std::any_of(evidence.begin(), evidence.end(), [](const auto& e) { return !e.entropy.is_zero(); });
}

HeisenbergClassification classify_heisenberg(HeisenbergRing ring, Prime p, std::size_t sample_size,
                                             std::uint64_t seed) {
    HeisenbergClassification result{ring == HeisenbergRing::Zp ? EntropyClass::E0 : EntropyClass::EFiniteNotE0, {}};
    std::mt19937_64 rng(seed);
    // Numerators up to p^3, clamped so the bound fits in a long.
    const long pv = static_cast<long>(std::min<std::uint64_t>(p.value(), 100'000));
    std::uniform_int_distribution<long> numerator(-pv * pv * pv, pv * pv * pv);
    std::uniform_int_distribution<long> exponent(-3, 3);
    auto random_scalar = [&](bool integral) {
        Rational x(numerator(rng));
        long e = exponent(rng);
        if (integral)
            e = std::abs(e);
        x *= ppow(p, e);
        return x;
    };

    std::vector<DiagonalEndo> sample;
    if (ring == HeisenbergRing::Qp && sample_size > 0)
        sample.push_back({ppow(p, -1), Rational(1)});
    while (sample.size() < sample_size) {
        bool integral = ring == HeisenbergRing::Zp;
        sample.push_back({random_scalar(integral), random_scalar(integral)});
    }
    for (const auto& phi : sample)
        result.evidence.push_back({phi, entropy_oracle_diagonal(phi, p).entropy});
    return result;
}

std::string_view to_string(HeisenbergRing ring) { return ring == HeisenbergRing::Zp ? "zp" : "qp"; }

} // namespace padent
