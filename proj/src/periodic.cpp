#include "padent/periodic.hpp"

#include "padent/errors.hpp"

namespace padent {

void PeriodicGroup::add_component(const FiniteRankPGroup& component) {
    auto [it, inserted] = components_.emplace(component.p.value(), component);
    if (!inserted)
        throw ValidationError("duplicate component for prime " + std::to_string(component.p.value()));
}

void PeriodicEndomorphism::add_component(const BlockEndomorphism& phi) {
    auto [it, inserted] = components_.emplace(phi.group().p.value(), phi);
    if (!inserted)
        throw ValidationError("duplicate endomorphism component for prime " + std::to_string(phi.group().p.value()));
}

PeriodicGroup PeriodicEndomorphism::group() const {
    PeriodicGroup g;
    for (const auto& [p, phi] : components_)
        g.add_component(phi.group());
    return g;
}

void PeriodicEndomorphism::require_valid_for(const PeriodicGroup& g) const {
    for (const auto& [p, phi] : components_) {
        auto it = g.components().find(p);
        if (it == g.components().end())
            throw ValidationError("endomorphism component for prime " + std::to_string(p) +
                                  " outside the group's support");
        if (!(it->second == phi.group()))
            throw ValidationError("endomorphism component for prime " + std::to_string(p) +
                                  " acts on a different group");
        phi.require_valid();
    }
}

EntropyValue entropy(const PeriodicEndomorphism& phi) {
    EntropyValue total;
    for (const auto& [p, component] : phi.components())
        total = entropy_sum(total, entropy(component));
    return total;
}

EntropyClass classify(const PeriodicGroup& g) {
    for (const auto& [p, component] : g.components())
        if (classify(component) != EntropyClass::E0)
            return EntropyClass::EFiniteNotE0;
    return EntropyClass::E0;
}

} // namespace padent
