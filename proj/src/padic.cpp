#include "padent/padic.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "padent/errors.hpp"

namespace padent {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_digit_run(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value))
        throw std::invalid_argument(std::to_string(value) + " is not prime");
}

Integer Prime::as_integer() const {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(value_), 0, 0, &value_);
    return z;
}

std::ostream& operator<<(std::ostream& os, Prime p) { return os << p.value(); }

long Valuation::value() const {
    if (infinite_)
        throw std::logic_error("valuation of zero is infinite");
    return value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.is_infinite())
        return os << "+inf";
    return os << v.value();
}

long vp(const Integer& x, Prime p) {
    if (sgn(x) == 0)
        throw std::invalid_argument("vp of zero integer");
    Integer rest;
    Integer pz = p.as_integer();
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

Valuation vp(const Rational& x, Prime p) {
    if (sgn(x) == 0)
        return Valuation::infinity();
    return Valuation(vp(Integer(x.get_num()), p) - vp(Integer(x.get_den()), p));
}

Integer ppow_int(Prime p, unsigned long e) {
    Integer r;
    Integer pz = p.as_integer();
    mpz_pow_ui(r.get_mpz_t(), pz.get_mpz_t(), e);
    return r;
}

Rational ppow(Prime p, long e) {
    if (e >= 0)
        return Rational(ppow_int(p, static_cast<unsigned long>(e)));
    Rational r(Integer(1), ppow_int(p, static_cast<unsigned long>(-e)));
    return r;
}

Rational pnorm(const Rational& x, Prime p) {
    Valuation v = vp(x, p);
    if (v.is_infinite())
        return Rational(0);
    return ppow(p, -v.value());
}

bool is_p_integral(const Rational& x, Prime p) {
    if (sgn(x) == 0)
        return true;
    Integer den(x.get_den());
    Integer pz = p.as_integer();
    return !mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t());
}

Rational reduce_mod_ppower(const Rational& x, Prime p, long e) {
    if (sgn(x) == 0)
        return Rational(0);
    // x = n / (p^k d') with gcd(d', p) = 1.
    Integer den(x.get_den());
    long k = vp(den, p);
    long shift = std::max({k, 0L, -e});
    // t = x * p^shift is p-integral; reduce it mod p^(e + shift).
    long m = e + shift;
    if (m <= 0)
        return Rational(0);
    Rational t = x * ppow(p, shift);
    Integer modulus = ppow_int(p, static_cast<unsigned long>(m));
    Integer inv;
    Integer tden(t.get_den());
    if (mpz_invert(inv.get_mpz_t(), tden.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::logic_error("reduce_mod_ppower: denominator not a unit");
    Integer c = Integer(t.get_num()) * inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    Rational r(c);
    r /= ppow(p, shift);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digit_run(num) || !is_digit_run(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (sgn(d) == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? Integer(-n) : n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

} // namespace padent
