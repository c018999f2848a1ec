#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "padent/padic.hpp"

namespace padent {

// Exact entropy sum_p m_p * log p with non-negative integer exponents.
// Infinite entropy has no representation here; nothing in this library can
// produce it for finite-rank groups.
class EntropyValue {
public:
    using Terms = std::map<std::uint64_t, std::uint64_t>;

    EntropyValue() = default;
    EntropyValue(Prime p, std::uint64_t exponent);

    static EntropyValue zero() { return {}; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::uint64_t exponent(Prime p) const;
    const Terms& terms() const noexcept { return terms_; }

    // sum m_p * ln(p), in nats. Display only.
    double approx_nats() const;

    EntropyValue& operator+=(const EntropyValue& other);
    friend EntropyValue operator+(EntropyValue a, const EntropyValue& b) { return a += b; }
    friend bool operator==(const EntropyValue&, const EntropyValue&) = default;

    // Componentwise order; a <= b iff every exponent of a is <= that of b.
    bool dominated_by(const EntropyValue& other) const;

private:
    Terms terms_;
};

EntropyValue entropy_sum(const EntropyValue& a, const EntropyValue& b);

// "0", "2 log 3", "log 2 + 3 log 5".
std::string to_string(const EntropyValue& h);

} // namespace padent
