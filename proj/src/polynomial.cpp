#include "padent/polynomial.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "padent/errors.hpp"

namespace padent {

MonicPolynomial MonicPolynomial::from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> full{Rational(1)}; // ascending, including leading
    for (const auto& r : roots) {
        std::vector<Rational> next(full.size() + 1);
        for (std::size_t i = 0; i < full.size(); ++i) {
            next[i + 1] += full[i];
            next[i] -= r * full[i];
        }
        full = std::move(next);
    }
    full.pop_back();
    return MonicPolynomial(std::move(full));
}

Rational MonicPolynomial::coefficient(std::size_t i) const {
    if (i == coeffs_.size())
        return Rational(1);
    if (i > coeffs_.size())
        return Rational(0);
    return coeffs_[i];
}

Rational MonicPolynomial::operator()(const Rational& x) const {
    Rational acc = 1;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

MonicPolynomial charpoly(const RationalMatrix& a) {
    if (!a.is_square())
        throw ValidationError("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix h = a;

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t pivot = c + 1;
        while (pivot < n && sgn(h(pivot, c)) == 0)
            ++pivot;
        if (pivot == n)
            continue;
        if (pivot != c + 1) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(h(pivot, k), h(c + 1, k));
            for (std::size_t k = 0; k < n; ++k)
                std::swap(h(k, pivot), h(k, c + 1));
        }
        const Rational piv = h(c + 1, c);
        for (std::size_t r = c + 2; r < n; ++r) {
            if (sgn(h(r, c)) == 0)
                continue;
            Rational u = h(r, c) / piv;
            for (std::size_t k = 0; k < n; ++k)
                h(r, k) -= u * h(c + 1, k);
            for (std::size_t k = 0; k < n; ++k)
                h(k, c + 1) += u * h(k, r);
        }
    }

    // p_m = (X - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<std::vector<Rational>> p(n + 1);
    p[0] = {Rational(1)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Rational> next(m + 1);
        const auto& prev = p[m - 1];
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i + 1] += prev[i];
            next[i] -= h(m - 1, m - 1) * prev[i];
        }
        Rational t = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            t *= h(i + 1, i);
            if (sgn(t) == 0)
                break;
            Rational f = h(i, m - 1) * t;
            if (sgn(f) == 0)
                continue;
            const auto& q = p[i];
            for (std::size_t k = 0; k < q.size(); ++k)
                next[k] -= f * q[k];
        }
        p[m] = std::move(next);
    }
    auto coeffs = std::move(p[n]);
    coeffs.pop_back();
    return MonicPolynomial(std::move(coeffs));
}

RationalMatrix companion(const MonicPolynomial& f) {
    const std::size_t n = f.degree();
    RationalMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i)
        c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i)
        c(i, n - 1) = -f.coefficient(i);
    return c;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    std::map<std::size_t, Rational> parse() {
        std::map<std::size_t, Rational> terms;
        skip_space();
        if (pos_ == text_.size())
            fail("empty polynomial");
        bool first = true;
        while (pos_ < text_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [degree, coeff] = term();
            terms[degree] += negative ? Rational(-coeff) : coeff;
            skip_space();
        }
        return terms;
    }

private:
    std::pair<std::size_t, Rational> term() {
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            coeff = parse_rational(text_.substr(start, pos_ - start));
            have_coeff = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (peek() != 'X' && peek() != 'x')
                    fail("expected variable after '*'");
            }
        }
        if (peek() != 'X' && peek() != 'x') {
            if (!have_coeff)
                fail("expected coefficient or variable");
            return {0, coeff};
        }
        ++pos_;
        skip_space();
        std::size_t degree = 1;
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            degree = std::stoul(std::string(text_.substr(start, pos_ - start)));
        }
        return {degree, coeff};
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

MonicPolynomial parse_monic_polynomial(std::string_view text) {
    auto terms = PolyParser(text).parse();
    while (!terms.empty() && sgn(terms.rbegin()->second) == 0)
        terms.erase(std::prev(terms.end()));
    if (terms.empty())
        throw ParseError("polynomial '" + std::string(text) + "' is zero");
    auto [degree, lead] = *terms.rbegin();
    if (lead != 1)
        throw ParseError("polynomial '" + std::string(text) + "' is not monic");
    std::vector<Rational> coeffs(degree);
    for (const auto& [d, c] : terms)
        if (d < degree)
            coeffs[d] = c;
    return MonicPolynomial(std::move(coeffs));
}

std::string to_string(const MonicPolynomial& f) {
    std::ostringstream os;
    const std::size_t n = f.degree();
    auto monomial = [](std::size_t d) -> std::string {
        if (d == 0)
            return "";
        if (d == 1)
            return "X";
        return "X^" + std::to_string(d);
    };
    os << (n == 0 ? "1" : monomial(n));
    for (std::size_t i = n; i-- > 0;) {
        Rational c = f.coefficient(i);
        if (sgn(c) == 0)
            continue;
        os << (sgn(c) < 0 ? " - " : " + ");
        Rational a = abs(c);
        if (i == 0 || a != 1)
            os << to_string(a);
        if (i > 0 && a != 1)
            os << '*';
        os << monomial(i);
    }
    return os.str();
}

} // namespace padent
