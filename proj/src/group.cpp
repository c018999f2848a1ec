#include "padent/group.hpp"

#include <sstream>

#include "padent/errors.hpp"
#include "padent/newton.hpp"

namespace padent {

namespace {

using C = Component;

void require_dim(const RationalVector& v, std::size_t n, std::string_view what) {
    if (v.size() != n)
        throw ValidationError(std::string(what) + " part has dimension " + std::to_string(v.size()) + ", expected " +
                              std::to_string(n));
}

// Reduction applied to a target coordinate after a linear combination.
Rational reduce_target(const FiniteRankPGroup& g, Component target, std::size_t row, const Rational& x) {
    switch (target) {
    case C::Pruefer:
        return reduce_mod_ppower(x, g.p, 0);
    case C::Finite:
        return reduce_mod_ppower(x, g.p, static_cast<long>(g.torsion_orders[row]));
    default:
        return x;
    }
}

} // namespace

std::string_view component_name(Component c) {
    switch (c) {
    case C::Zp:
        return "zp";
    case C::Qp:
        return "qp";
    case C::Pruefer:
        return "pr";
    case C::Finite:
        return "fin";
    }
    return "?";
}

std::string block_key(Component target, Component source) {
    return std::string(component_name(target)) + "<-" + std::string(component_name(source));
}

std::optional<std::pair<Component, Component>> parse_block_key(std::string_view key) {
    for (auto t : kComponents)
        for (auto s : kComponents)
            if (key == block_key(t, s))
                return std::make_pair(t, s);
    return std::nullopt;
}

bool is_forced_zero(Component target, Component source) { return !forced_zero_reason(target, source).empty(); }

std::string_view forced_zero_reason(Component target, Component source) {
    if (target == C::Zp && source == C::Qp)
        return "no continuous hom Q_p->Z_p: Z_p has no nonzero divisible subgroup";
    if (target == C::Zp && source == C::Pruefer)
        return "no continuous hom Z(p^inf)->Z_p: Z_p is torsion-free";
    if (target == C::Zp && source == C::Finite)
        return "no continuous hom F_p->Z_p: Z_p is torsion-free";
    if (target == C::Qp && source == C::Pruefer)
        return "no continuous hom Z(p^inf)->Q_p: Q_p is torsion-free";
    if (target == C::Qp && source == C::Finite)
        return "no continuous hom F_p->Q_p: Q_p is torsion-free";
    if (target == C::Finite && source == C::Qp)
        return "no continuous hom Q_p->F_p: a finite group has no nonzero divisible subgroup";
    if (target == C::Finite && source == C::Pruefer)
        return "no continuous hom Z(p^inf)->F_p: a finite group has no nonzero divisible subgroup";
    return {};
}

FiniteRankPGroup::FiniteRankPGroup(Prime prime, std::size_t zp, std::size_t qp, std::size_t pruefer,
                                   std::vector<unsigned> torsion)
    : p(prime), n1(zp), n2(qp), n3(pruefer), torsion_orders(std::move(torsion)) {
    for (unsigned k : torsion_orders)
        if (k == 0)
            throw ValidationError("torsion factor Z(p^0) is trivial; orders must be >= 1");
}

std::size_t FiniteRankPGroup::dim(Component c) const noexcept {
    switch (c) {
    case C::Zp:
        return n1;
    case C::Qp:
        return n2;
    case C::Pruefer:
        return n3;
    case C::Finite:
        return n4();
    }
    return 0;
}

std::size_t rank_p(const FiniteRankPGroup& g) { return g.n1 + g.n2 + g.n3 + g.n4(); }

FiniteRankPGroup dual_group(const FiniteRankPGroup& g) { return FiniteRankPGroup(g.p, g.n3, g.n2, g.n1, g.torsion_orders); }

std::string_view to_string(EntropyClass c) { return c == EntropyClass::E0 ? "E0" : "EFiniteNotE0"; }

EntropyClass classify(const FiniteRankPGroup& g) { return g.n2 == 0 ? EntropyClass::E0 : EntropyClass::EFiniteNotE0; }

MixedElement zero_element(const FiniteRankPGroup& g) {
    return {RationalVector(g.n1), RationalVector(g.n2), RationalVector(g.n3), RationalVector(g.n4())};
}

MixedElement normalize_element(const FiniteRankPGroup& g, MixedElement x) {
    require_dim(x.zp, g.n1, "zp");
    require_dim(x.qp, g.n2, "qp");
    require_dim(x.pruefer, g.n3, "pruefer");
    require_dim(x.finite, g.n4(), "finite");
    for (const auto& v : x.zp)
        if (!is_p_integral(v, g.p))
            throw ValidationError("zp coordinate " + to_string(v) + " is not p-integral");
    for (auto& v : x.pruefer)
        v = reduce_mod_ppower(v, g.p, 0);
    for (std::size_t i = 0; i < x.finite.size(); ++i) {
        if (!is_p_integral(x.finite[i], g.p))
            throw ValidationError("finite coordinate " + to_string(x.finite[i]) + " is not a residue");
        x.finite[i] = reduce_mod_ppower(x.finite[i], g.p, static_cast<long>(g.torsion_orders[i]));
    }
    return x;
}

MixedElement add(const FiniteRankPGroup& g, const MixedElement& x, const MixedElement& y) {
    MixedElement s = normalize_element(g, x);
    MixedElement t = normalize_element(g, y);
    for (std::size_t i = 0; i < s.zp.size(); ++i)
        s.zp[i] += t.zp[i];
    for (std::size_t i = 0; i < s.qp.size(); ++i)
        s.qp[i] += t.qp[i];
    for (std::size_t i = 0; i < s.pruefer.size(); ++i)
        s.pruefer[i] += t.pruefer[i];
    for (std::size_t i = 0; i < s.finite.size(); ++i)
        s.finite[i] += t.finite[i];
    return normalize_element(g, std::move(s));
}

std::string Violation::message() const { return block_key(target, source) + ": " + constraint; }

BlockEndomorphism::BlockEndomorphism(FiniteRankPGroup group) : group_(std::move(group)) {
    for (auto t : kComponents)
        for (auto s : kComponents)
            blocks_[slot(t, s)] = RationalMatrix(group_.dim(t), group_.dim(s));
}

BlockEndomorphism BlockEndomorphism::identity(const FiniteRankPGroup& group) {
    BlockEndomorphism phi(group);
    for (auto c : kComponents)
        phi.blocks_[slot(c, c)] = RationalMatrix::identity(group.dim(c));
    return phi;
}

const RationalMatrix& BlockEndomorphism::block(Component target, Component source) const {
    return blocks_[slot(target, source)];
}

void BlockEndomorphism::set_block(Component target, Component source, RationalMatrix m) {
    if (m.rows() != group_.dim(target) || m.cols() != group_.dim(source))
        throw ValidationError("block " + block_key(target, source) + " has shape " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(group_.dim(target)) + "x" +
                              std::to_string(group_.dim(source)));
    blocks_[slot(target, source)] = std::move(m);
}

std::vector<Violation> BlockEndomorphism::violations() const {
    std::vector<Violation> out;
    const Prime p = group_.p;
    auto each_entry = [&](Component t, Component s, auto&& check) {
        const auto& m = block(t, s);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (auto why = check(m(i, j), i, j); !why.empty()) {
                    std::ostringstream os;
                    os << why << " (entry [" << i << "][" << j << "] = " << to_string(m(i, j)) << ')';
                    out.push_back({t, s, os.str()});
                    return;
                }
    };

    for (auto t : kComponents)
        for (auto s : kComponents)
            if (is_forced_zero(t, s) && !block(t, s).is_zero())
                out.push_back({t, s, std::string(forced_zero_reason(t, s))});

    each_entry(C::Zp, C::Zp, [&](const Rational& x, std::size_t, std::size_t) -> std::string {
        return is_p_integral(x, p) ? "" : "not p-integral: Z_p is not p-divisible";
    });
    each_entry(C::Pruefer, C::Pruefer, [&](const Rational& x, std::size_t, std::size_t) -> std::string {
        return is_p_integral(x, p) ? "" : "not p-integral: End(Z(p^inf)) = Z_p";
    });
    each_entry(C::Pruefer, C::Finite, [&](const Rational& x, std::size_t, std::size_t j) -> std::string {
        Rational scaled = x * ppow(p, static_cast<long>(group_.torsion_orders[j]));
        return is_p_integral(scaled, p) ? "" : "image order does not divide the source order p^k";
    });
    each_entry(C::Finite, C::Zp, [&](const Rational& x, std::size_t, std::size_t) -> std::string {
        return is_p_integral(x, p) ? "" : "not a residue: entry is not p-integral";
    });
    each_entry(C::Finite, C::Finite, [&](const Rational& x, std::size_t i, std::size_t j) -> std::string {
        if (!is_p_integral(x, p))
            return "not a residue: entry is not p-integral";
        long need = static_cast<long>(group_.torsion_orders[i]) - static_cast<long>(group_.torsion_orders[j]);
        if (need > 0 && vp(x, p) < Valuation(need))
            return "Z(p^k_s)->Z(p^k_t) requires divisibility by p^(k_t-k_s)";
        return "";
    });
    return out;
}

void BlockEndomorphism::require_valid() const {
    auto v = violations();
    if (v.empty())
        return;
    std::string msg = "invalid endomorphism: " + v.front().message();
    if (v.size() > 1)
        msg += " (and " + std::to_string(v.size() - 1) + " more)";
    throw ValidationError(msg);
}

BlockEndomorphism BlockEndomorphism::normalized() const {
    require_valid();
    BlockEndomorphism out = *this;
    for (auto t : {C::Pruefer, C::Finite})
        for (auto s : kComponents) {
            auto& m = out.blocks_[slot(t, s)];
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (!(t == C::Pruefer && (s == C::Qp || s == C::Pruefer)))
                        m(i, j) = reduce_target(group_, t, i, m(i, j));
        }
    return out;
}

MixedElement apply(const BlockEndomorphism& phi, const MixedElement& x) {
    phi.require_valid();
    const auto& g = phi.group();
    MixedElement in = normalize_element(g, x);
    auto part = [&](Component c) -> const RationalVector& {
        switch (c) {
        case C::Zp:
            return in.zp;
        case C::Qp:
            return in.qp;
        case C::Pruefer:
            return in.pruefer;
        default:
            return in.finite;
        }
    };
    MixedElement out = zero_element(g);
    auto target_part = [&](Component c) -> RationalVector& {
        switch (c) {
        case C::Zp:
            return out.zp;
        case C::Qp:
            return out.qp;
        case C::Pruefer:
            return out.pruefer;
        default:
            return out.finite;
        }
    };
    for (auto t : kComponents) {
        RationalVector& y = target_part(t);
        for (auto s : kComponents) {
            if (is_forced_zero(t, s) || g.dim(t) == 0 || g.dim(s) == 0)
                continue;
            RationalVector contribution = phi.block(t, s) * part(s);
            for (std::size_t i = 0; i < y.size(); ++i)
                y[i] += contribution[i];
        }
    }
    return normalize_element(g, std::move(out));
}

BlockEndomorphism compose(const BlockEndomorphism& outer, const BlockEndomorphism& inner) {
    if (!(outer.group() == inner.group()))
        throw ValidationError("compose: endomorphisms of different groups");
    outer.require_valid();
    inner.require_valid();
    const auto& g = outer.group();
    BlockEndomorphism out(g);
    for (auto t : kComponents)
        for (auto s : kComponents) {
            RationalMatrix m(g.dim(t), g.dim(s));
            for (auto k : kComponents)
                if (g.dim(k) != 0)
                    m += outer.block(t, k) * inner.block(k, s);
            out.set_block(t, s, std::move(m));
        }
    return out.normalized();
}

RationalMatrix reduce_to_divisible_quotient(const BlockEndomorphism& phi) {
    phi.require_valid();
    return phi.block(C::Qp, C::Qp);
}

RationalMatrix torsion_free_quotient_matrix(const BlockEndomorphism& phi) {
    phi.require_valid();
    return RationalMatrix::block_lower(phi.block(C::Zp, C::Zp), phi.block(C::Qp, C::Zp), phi.block(C::Qp, C::Qp));
}

EntropyValue entropy(const BlockEndomorphism& phi) {
    return yuzvinski_entropy(reduce_to_divisible_quotient(phi), phi.group().p);
}

} // namespace padent
