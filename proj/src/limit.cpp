#include "padent/limit.hpp"

#include <algorithm>

#include "padent/errors.hpp"

namespace padent {

bool LimitDiagnostics::push(long d) {
    increments.push_back(d);
    const std::size_t size = increments.size();
    for (std::size_t q = 1; q <= max_period && q * window <= size; ++q) {
        const std::size_t start = size - q * window;
        bool repeats = true;
        for (std::size_t i = start + q; i < size && repeats; ++i)
            repeats = increments[i] == increments[i - q];
        if (!repeats)
            continue;
        long sum = 0;
        for (std::size_t i = size - q; i < size; ++i)
            sum += increments[i];
        if (sum % static_cast<long>(q) != 0)
            continue;
        period = q;
        stabilized_at = start + 1;
        return true;
    }
    return false;
}

long LimitDiagnostics::limit() const {
    if (!stabilized_at)
        throw std::logic_error("limit requested before stabilization");
    long sum = 0;
    for (std::size_t i = increments.size() - period; i < increments.size(); ++i)
        sum += increments[i];
    return sum / static_cast<long>(period);
}

void require_limit_parameters(std::size_t window, std::size_t cap) {
    if (window == 0)
        throw ValidationError("stabilization window must be positive");
    if (cap <= window)
        throw ValidationError("cap must exceed the stabilization window");
}

} // namespace padent
