#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padent {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

// A rational prime, checked with deterministic Miller-Rabin at construction.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    Integer as_integer() const;

    friend bool operator==(Prime, Prime) = default;
    friend std::strong_ordering operator<=>(Prime, Prime) = default;

private:
    std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, Prime p);

// v_p(x) with the convention v_p(0) = +infinity.
class Valuation {
public:
    constexpr explicit Valuation(long value) noexcept : value_(value), infinite_(false) {}
    static constexpr Valuation infinity() noexcept { return Valuation(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    long value() const; // throws std::logic_error on infinity

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return Valuation(a.value_ + b.value_);
    }

private:
    constexpr Valuation() noexcept : value_(0), infinite_(true) {}
    long value_;
    bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

Valuation vp(const Rational& x, Prime p);
long vp(const Integer& x, Prime p); // x != 0

// |x|_p = p^(-v_p(x)), and |0|_p = 0.
Rational pnorm(const Rational& x, Prime p);

// p^e for any integer e.
Rational ppow(Prime p, long e);
Integer ppow_int(Prime p, unsigned long e);

bool is_p_integral(const Rational& x, Prime p);

// Canonical representative of the class of x in Q / p^e Z_(p): the unique
// element of Z[1/p] lying in [0, p^e).
Rational reduce_mod_ppower(const Rational& x, Prime p, long e);

// Reads "a", "-a", "a/b" (b > 0 after sign normalization). Whitespace is not allowed.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

} // namespace padent
