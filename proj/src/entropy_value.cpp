#include "padent/entropy_value.hpp"

#include <cmath>
#include <sstream>

namespace padent {

EntropyValue::EntropyValue(Prime p, std::uint64_t exponent) {
    if (exponent != 0)
        terms_.emplace(p.value(), exponent);
}

std::uint64_t EntropyValue::exponent(Prime p) const {
    auto it = terms_.find(p.value());
    return it == terms_.end() ? 0 : it->second;
}

double EntropyValue::approx_nats() const {
    double total = 0.0;
    for (auto [p, m] : terms_)
        total += static_cast<double>(m) * std::log(static_cast<double>(p));
    return total;
}

EntropyValue& EntropyValue::operator+=(const EntropyValue& other) {
    for (auto [p, m] : other.terms_)
        terms_[p] += m;
    return *this;
}

bool EntropyValue::dominated_by(const EntropyValue& other) const {
    for (auto [p, m] : terms_) {
        auto it = other.terms_.find(p);
        if (it == other.terms_.end() || it->second < m)
            return false;
    }
    return true;
}

EntropyValue entropy_sum(const EntropyValue& a, const EntropyValue& b) { return a + b; }

std::string to_string(const EntropyValue& h) {
    if (h.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [p, m] : h.terms()) {
        if (!first)
            os << " + ";
        first = false;
        if (m != 1)
            os << m << ' ';
        os << "log " << p;
    }
    return os.str();
}

} // namespace padent
