#pragma once

#include <cstdint>
#include <map>

#include "padent/entropy_value.hpp"
#include "padent/group.hpp"

namespace padent {

// Local product of finitely many p-components; every prime outside the
// support carries the trivial group.
class PeriodicGroup {
public:
    PeriodicGroup() = default;

    // Throws ValidationError if the component's prime differs from p or p is already present.
    void add_component(const FiniteRankPGroup& component);

    const std::map<std::uint64_t, FiniteRankPGroup>& components() const noexcept { return components_; }
    bool empty() const noexcept { return components_.empty(); }

    friend bool operator==(const PeriodicGroup&, const PeriodicGroup&) = default;

private:
    std::map<std::uint64_t, FiniteRankPGroup> components_;
};

// Each G_p is fully invariant, so an endomorphism is a family of
// per-prime endomorphisms with no cross-prime blocks.
class PeriodicEndomorphism {
public:
    PeriodicEndomorphism() = default;

    void add_component(const BlockEndomorphism& phi);

    const std::map<std::uint64_t, BlockEndomorphism>& components() const noexcept { return components_; }
    PeriodicGroup group() const;

    // Throws ValidationError on an invalid component or a key mismatch with g.
    void require_valid_for(const PeriodicGroup& g) const;

private:
    std::map<std::uint64_t, BlockEndomorphism> components_;
};

// sum over p of h_top(phi restricted to G_p).
EntropyValue entropy(const PeriodicEndomorphism& phi);

// E0 iff every component is E0; finite support keeps everything in E_<inf.
EntropyClass classify(const PeriodicGroup& g);

} // namespace padent
