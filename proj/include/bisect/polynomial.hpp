#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisect/rational.hpp"

namespace bisect {

/**
 * Dense univariate polynomial over rat, coefficients in ascending degree
 * order. Canonical form: no trailing zero coefficients; the zero polynomial
 * stores an empty list and its degree is "none" (never an integer).
 *
 * Everything here is exact and degree stays small (the cubics of the
 * bisector problem and low-degree elements of Q[q]), so the representation
 * is deliberately plain.
 */
class qpoly {
    std::vector<rat> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

public:
    qpoly() = default;
    qpoly(rat constant) {
        c_.push_back(std::move(constant));
        trim();
    }
    qpoly(long long constant) : qpoly(rat(constant)) {}
    explicit qpoly(std::vector<rat> ascending) : c_(std::move(ascending)) { trim(); }

    /// c * X^k
    static qpoly monomial(rat c, int k) {
        std::vector<rat> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return qpoly(std::move(v));
    }
    static qpoly x() { return monomial(rat(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// nullopt for the zero polynomial.
    std::optional<int> degree() const {
        if (c_.empty())
            return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    const std::vector<rat>& coeffs() const { return c_; }

    /// Coefficient of X^k; zero beyond the degree.
    const rat& coeff(std::size_t k) const {
        static const rat zero;
        return k < c_.size() ? c_[k] : zero;
    }

    /// Leading coefficient. Pre: nonzero polynomial.
    const rat& lead() const { return c_.back(); }

    rat eval(const rat& x) const {
        rat acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    qpoly operator-() const {
        std::vector<rat> v;
        v.reserve(c_.size());
        for (const auto& a : c_)
            v.push_back(-a);
        return qpoly(std::move(v));
    }

    friend qpoly operator+(const qpoly& a, const qpoly& b);
    friend qpoly operator-(const qpoly& a, const qpoly& b);
    friend qpoly operator*(const qpoly& a, const qpoly& b);
    friend qpoly operator*(const rat& s, const qpoly& p);
    friend qpoly operator*(const qpoly& p, const rat& s) { return s * p; }

    friend bool operator==(const qpoly& a, const qpoly& b) { return a.c_ == b.c_; }
};

/// Formal derivative.
qpoly derivative(const qpoly& p);

/// Euclidean division: a = b*quot + rem with deg rem < deg b. Exact.
/// Throws division_by_zero for b = 0.
std::pair<qpoly, qpoly> divrem(const qpoly& a, const qpoly& b);

/// Scales to leading coefficient 1. Pre: nonzero.
qpoly monic(const qpoly& p);

/// p = content * primitive with primitive having coprime integer
/// coefficients and positive leading coefficient; the content carries the
/// sign. Throws zero_polynomial for p = 0.
std::pair<rat, qpoly> content_primitive(const qpoly& p);

/// Monic gcd via the Euclidean algorithm. Throws zero_polynomial when both
/// arguments are zero.
qpoly poly_gcd(const qpoly& a, const qpoly& b);

/// Standard Sturm sequence p, p', then negated remainders down to a nonzero
/// constant. Pre: p nonzero and square-free (divide by gcd(p, p') first).
std::vector<qpoly> sturm_chain(const qpoly& p);

/// Number of distinct real roots of the chain's head in (lo, hi].
/// nullopt endpoints mean -inf / +inf (handled via leading-coefficient
/// signs). Throws endpoint_is_root when a finite endpoint is a root of the
/// head; the caller owns perturbation.
int sturm_count(const std::vector<qpoly>& chain,
                const std::optional<rat>& lo,
                const std::optional<rat>& hi);

/// Descending-power rendering with explicit '*' and '^':
/// "2*X^3 + 3*X^2 - 4*X - 1". The zero polynomial renders as "0".
std::string render(const qpoly& p, const std::string& var = "X");

} // namespace bisect
