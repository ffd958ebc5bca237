#pragma once

#include <vector>

#include "bisect/polynomial.hpp"

namespace bisect {

/**
 * Certified bracket for one real root. For an irrational root: lo < hi,
 * poly(lo) and poly(hi) nonzero with opposite signs, and exactly one root
 * of poly lies in (lo, hi) (Sturm-certified by the producer). A rational
 * root is a degenerate exact hit: lo == hi == the root, flagged `exact`.
 * `poly` is the square-free part of the isolated polynomial.
 */
struct isolation {
    rat lo;
    rat hi;
    qpoly poly;
    bool exact = false;

    /// Pre: exact.
    const rat& value() const { return lo; }
    rat width() const { return hi - lo; }
};

/// p divided by gcd(p, p'), made primitive with positive leading
/// coefficient. Same distinct real roots as p.
qpoly square_free_part(const qpoly& p);

/// 1 + max |a_i / a_lead|: every real root lies strictly inside (-B, B).
rat cauchy_root_bound(const qpoly& p);

/// Pairwise-disjoint certified brackets covering all distinct real roots,
/// sorted by position; rational roots come back as exact hits. Throws
/// zero_polynomial / constant_polynomial on degenerate input.
std::vector<isolation> isolate_real_roots(const qpoly& p);

/// Bisection-narrowed copy with width <= eps; the certified root never
/// escapes (endpoint signs stay opposite). Pre: eps > 0.
isolation refine(isolation iv, const rat& eps);

/// The unique root t = l/b > 1/2 of a bisector cubic 2X^3+3X^2-4q^2X-1,
/// Sturm-certified unique in (1/2, +inf). Throws geometric_root_anomaly if
/// the count there is not exactly 1.
isolation geometric_root(const qpoly& fq);

} // namespace bisect
