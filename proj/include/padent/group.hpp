#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padent/entropy_value.hpp"
#include "padent/matrix.hpp"
#include "padent/padic.hpp"

namespace padent {

// The four building blocks of a finite-rank locally compact abelian p-group
// Z_p^n1 x Q_p^n2 x Z(p^inf)^n3 x F_p.
enum class Component : std::uint8_t { Zp = 0, Qp = 1, Pruefer = 2, Finite = 3 };

inline constexpr std::array<Component, 4> kComponents{Component::Zp, Component::Qp, Component::Pruefer,
                                                      Component::Finite};

std::string_view component_name(Component c); // "zp", "qp", "pr", "fin"
std::string block_key(Component target, Component source); // "qp<-zp"
std::optional<std::pair<Component, Component>> parse_block_key(std::string_view key);

// Pairs with no nonzero continuous homomorphism source -> target.
bool is_forced_zero(Component target, Component source);
std::string_view forced_zero_reason(Component target, Component source);

struct FiniteRankPGroup {
    Prime p;
    std::size_t n1 = 0; // Z_p
    std::size_t n2 = 0; // Q_p
    std::size_t n3 = 0; // Z(p^inf)
    std::vector<unsigned> torsion_orders; // F_p = sum Z(p^k_i), every k_i >= 1

    explicit FiniteRankPGroup(Prime prime, std::size_t zp = 0, std::size_t qp = 0, std::size_t pruefer = 0,
                              std::vector<unsigned> torsion = {});

    std::size_t n4() const noexcept { return torsion_orders.size(); }
    std::size_t dim(Component c) const noexcept;

    friend bool operator==(const FiniteRankPGroup&, const FiniteRankPGroup&) = default;
};

std::size_t rank_p(const FiniteRankPGroup& g);
// Pontryagin dual: Z_p and Z(p^inf) trade places, Q_p and F_p are self-dual.
FiniteRankPGroup dual_group(const FiniteRankPGroup& g);

enum class EntropyClass { E0, EFiniteNotE0 };
std::string_view to_string(EntropyClass c);

// Every endomorphism has zero entropy iff there is no Q_p factor; entropy is
// always finite.
EntropyClass classify(const FiniteRankPGroup& g);

// Concrete element. Pruefer coordinates are rationals modulo Z_(p) with
// canonical representative in [0, 1); finite coordinates are residues mod p^k_i.
struct MixedElement {
    RationalVector zp;
    RationalVector qp;
    RationalVector pruefer;
    RationalVector finite;

    friend bool operator==(const MixedElement&, const MixedElement&) = default;
};

MixedElement zero_element(const FiniteRankPGroup& g);
// Reduces torsion coordinates to canonical representatives; throws
// ValidationError on wrong dimensions or a non-integral Z_p / finite coordinate.
MixedElement normalize_element(const FiniteRankPGroup& g, MixedElement x);
MixedElement add(const FiniteRankPGroup& g, const MixedElement& x, const MixedElement& y);

struct Violation {
    Component target;
    Component source;
    std::string constraint;

    std::string message() const;
};

// A continuous endomorphism as a 4x4 grid of blocks; block (t, s) is a
// dim(t) x dim(s) rational matrix acting source -> target:
//   zp<-zp  p-integral                 qp<-zp, qp<-qp  arbitrary
//   pr<-zp  c mod Z_(p)                pr<-qp          x -> c x mod Z_(p)
//   pr<-pr  p-integral                 pr<-fin         c with p^k_source c integral, mod Z_(p)
//   fin<-zp residue mod p^k_target     fin<-fin        residue divisible by p^max(0, k_t - k_s)
// and the remaining seven blocks must vanish.
class BlockEndomorphism {
public:
    explicit BlockEndomorphism(FiniteRankPGroup group); // zero map
    static BlockEndomorphism identity(const FiniteRankPGroup& group);

    const FiniteRankPGroup& group() const noexcept { return group_; }
    const RationalMatrix& block(Component target, Component source) const;
    void set_block(Component target, Component source, RationalMatrix m);

    std::vector<Violation> violations() const;
    bool valid() const { return violations().empty(); }
    void require_valid() const;

    // Torsion blocks reduced to canonical representatives. Requires validity.
    BlockEndomorphism normalized() const;

    friend bool operator==(const BlockEndomorphism&, const BlockEndomorphism&) = default;

private:
    static std::size_t slot(Component target, Component source) {
        return static_cast<std::size_t>(target) * 4 + static_cast<std::size_t>(source);
    }

    FiniteRankPGroup group_;
    std::array<RationalMatrix, 16> blocks_;
};

MixedElement apply(const BlockEndomorphism& phi, const MixedElement& x);

// outer o inner, normalized.
BlockEndomorphism compose(const BlockEndomorphism& outer, const BlockEndomorphism& inner);

// The qp<-qp block: the induced map on d(G / t(G)) = Q_p^n2.
RationalMatrix reduce_to_divisible_quotient(const BlockEndomorphism& phi);

// [[zp<-zp, 0], [qp<-zp, qp<-qp]]: the induced map on G / t(G) = Z_p^n1 x Q_p^n2
// written in Q_p^(n1+n2) coordinates.
RationalMatrix torsion_free_quotient_matrix(const BlockEndomorphism& phi);

EntropyValue entropy(const BlockEndomorphism& phi);

} // namespace padent
