#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisect/polynomial.hpp"

namespace bisect {

/**
 * Element of Q[q][X]: a polynomial in X whose coefficients are polynomials
 * in q, stored ascending in the X-power. X is the outer variable because
 * substitution at X and content across X-coefficients are the dominant
 * operations on the bisector cubic.
 */
class bipoly {
    std::vector<qpoly> xc_;

    void trim() {
        while (!xc_.empty() && xc_.back().is_zero())
            xc_.pop_back();
    }

public:
    bipoly() = default;
    bipoly(qpoly constant) {
        xc_.push_back(std::move(constant));
        trim();
    }
    bipoly(const rat& constant) : bipoly(qpoly(constant)) {}
    bipoly(long long constant) : bipoly(qpoly(constant)) {}
    explicit bipoly(std::vector<qpoly> ascending) : xc_(std::move(ascending)) { trim(); }

    /// c(q) * X^k
    static bipoly monomial(qpoly c, int k) {
        std::vector<qpoly> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return bipoly(std::move(v));
    }
    static bipoly x() { return monomial(qpoly(1), 1); }
    /// The inner variable q, as a degree-0-in-X element.
    static bipoly q() { return bipoly(qpoly::x()); }

    bool is_zero() const { return xc_.empty(); }

    /// Degree in X; nullopt for the zero element.
    std::optional<int> degree_x() const {
        if (xc_.empty())
            return std::nullopt;
        return static_cast<int>(xc_.size()) - 1;
    }

    const std::vector<qpoly>& xcoeffs() const { return xc_; }

    const qpoly& xcoeff(std::size_t k) const {
        static const qpoly zero;
        return k < xc_.size() ? xc_[k] : zero;
    }

    const qpoly& lead() const { return xc_.back(); }

    bipoly operator-() const {
        std::vector<qpoly> v;
        v.reserve(xc_.size());
        for (const auto& c : xc_)
            v.push_back(-c);
        return bipoly(std::move(v));
    }

    friend bipoly operator+(const bipoly& a, const bipoly& b);
    friend bipoly operator-(const bipoly& a, const bipoly& b);
    friend bipoly operator*(const bipoly& a, const bipoly& b);
    friend bipoly operator*(const qpoly& s, const bipoly& f);
    friend bipoly operator*(const rat& s, const bipoly& f) { return qpoly(s) * f; }

    friend bool operator==(const bipoly& a, const bipoly& b) { return a.xc_ == b.xc_; }
};

bipoly pow(const bipoly& f, int k);

/// The bisector cubic 2X^3 + 3X^2 - 4q^2X - 1 (unit base-vertex bisector).
bipoly bisector_cubic();

/// 2p^2 X^3 + 3p^2 X^2 - 4q^2 X - p^2 for a base-vertex bisector of length
/// p > 0; at p = 1 this is bisector_cubic(). Throws invalid_length for p <= 0.
bipoly general_cubic(const rat& p);

/// Specializes q to a concrete rational, yielding a univariate cubic in X.
qpoly eval_q(const bipoly& f, const rat& qval);

/// Substitutes X = c, yielding an element of Q[q]; the zero polynomial iff
/// c is a root of f over Q(q).
qpoly subst_x(const bipoly& f, const rat& c);

/// Monic gcd in Q[q] of all X-coefficients. Throws zero_polynomial for 0.
qpoly content_x(const bipoly& f);

/// X-coefficients reversed: deg-n f with f(1/h)*h^n = reverse_x(f)(h).
bipoly reverse_x(const bipoly& f);

/// "2*X^3 + 3*X^2 + (-4*q^2)*X + (-1)": descending X-powers joined by " + ",
/// non-constant or negative coefficients parenthesized.
std::string render(const bipoly& f, const std::string& xvar = "X", const std::string& qvar = "q");

} // namespace bisect
