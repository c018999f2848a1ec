#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padent {

// Trace of a sequence of integer increments whose eventual value is the
// quantity of interest. The limit is accepted once the last `window`
// increments agree; nothing is extrapolated past `cap` steps.
struct LimitDiagnostics {
    std::vector<long> increments;
    std::optional<std::size_t> stabilized_at; // 1-based position of the first increment of the repeating window
    std::size_t window = 5;
    std::size_t cap = 40;
    // Patterns of length up to max_period are accepted once repeated `window`
    // times; the limit is then the mean over one pattern, which must be an integer.
    std::size_t max_period = 1;
    std::size_t period = 1;

    // Appends d and returns true once the trailing window is constant.
    bool push(long d);
    long limit() const; // requires stabilized_at
};

class StabilizationError : public std::runtime_error {
public:
    StabilizationError(const std::string& what, LimitDiagnostics diagnostics)
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

    const LimitDiagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
    LimitDiagnostics diagnostics_;
};

void require_limit_parameters(std::size_t window, std::size_t cap);

} // namespace padent
