#pragma once

#include <utility>

#include "bisect/rational.hpp"

namespace bisect {

/// Closed rational interval [lo, hi]. Arithmetic is outward-exact (the
/// rational endpoint operations are themselves exact, so enclosures are
/// guarantees, not estimates).
struct interval {
    rat lo;
    rat hi;

    interval() = default;
    interval(rat point) : lo(point), hi(std::move(point)) {}
    interval(rat l, rat h);

    rat width() const { return hi - lo; }
    rat mid() const { return (lo + hi) / rat(2); }
    bool is_point() const { return lo == hi; }
    bool contains(const rat& x) const { return lo <= x && x <= hi; }
    bool contains(const interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

interval operator+(const interval& a, const interval& b);
interval operator-(const interval& a, const interval& b);
interval operator*(const interval& a, const interval& b);
/// Pre: 0 is not contained in b.
interval operator/(const interval& a, const interval& b);

/// Rational r with r <= sqrt(x) < r + prec. Pre: x >= 0, prec > 0.
rat sqrt_below(const rat& x, const rat& prec);
/// Rational r with r - prec < sqrt(x) <= r.
rat sqrt_above(const rat& x, const rat& prec);

/// Enclosure of { sqrt(t) : t in x }, outward by at most prec per endpoint.
/// Pre: x.lo >= 0.
interval sqrt_enclosure(const interval& x, const rat& prec);

} // namespace bisect
