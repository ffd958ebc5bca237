#pragma once

#include "bisect/interval.hpp"
#include "bisect/rational.hpp"
#include "bisect/roots.hpp"

namespace bisect {

/**
 * Exact isosceles triangle: legs AB = AC = l, base BC = b, apex angle at
 * A. M is the midpoint of BC (the apex bisector AM is also height and
 * median); P is the foot on AC of the bisector from base vertex B.
 *
 * Lengths enter as squares so the core stays purely rational:
 *   q_sq = l^2 - b^2/4        (squared apex bisector AM)
 *   p_sq = b^2 l (b+2l)/(b+l)^2   (squared base-vertex bisector BP)
 *   cos_theta = b/(2l)        (base angle)
 *   cp_x = b l/(b+l)          (segment CP cut by the bisector theorem)
 */
struct triangle_instance {
    rat l;
    rat b;
    rat q_sq;
    rat p_sq;
    rat cos_theta;
    rat cp_x;
};

/// l^2 - b^2/4, cross-checked against the factored form
/// (2l+b)(2l-b) = 4 q_sq. Throws degenerate_triangle unless 2l > b > 0.
rat q_sq_from_sides(const rat& l, const rat& b);

/// b^2 l (b+2l)/(b+l)^2, computed both in closed form and through the
/// cosine-law chain with mandatory agreement.
rat p_sq_from_sides(const rat& l, const rat& b);

/// Cosine-law route: p^2 = b^2 + x^2 - 2 b x cos(theta) with
/// x = b l/(b+l), cos(theta) = b/(2l).
rat p_sq_cosine_chain(const rat& l, const rat& b);

/// Classical bisector-length route for the bisector from B:
/// AB*BC*(1 - (AC/(AB+BC))^2) = l b (1 - (l/(l+b))^2).
rat p_sq_bisector_oracle(const rat& l, const rat& b);

/// Squared base-vertex bisector of the triangle with apex bisector q and
/// shape ratio t = l/b > 1/2, with b eliminated:
/// p^2 = [4q^2/(4t^2-1)] * t(1+2t)/(1+t)^2. Equals 1 exactly iff t is a
/// root of the bisector cubic at q.
rat p_sq_from_q_t(const rat& q, const rat& t);

/// Exact value of 2 p_sq l^3 + 3 p_sq b l^2 - 4 q_sq b^2 l - p_sq b^3;
/// zero for every consistent triangle.
rat cubic_residual(const rat& l, const rat& b, const rat& p_sq, const rat& q_sq);

/// Fully populated exact instance; guarantees cubic_residual = 0.
triangle_instance forward_instance(const rat& l, const rat& b);

/**
 * Interval-certified numeric triangle recovered from (q, t):
 * b = 2q/sqrt(4t^2-1), l = t*b. Side enclosures have width <= eps and the
 * enclosure of the recomputed base-vertex bisector p is certified to lie
 * within 100*eps of 1.
 */
struct reconstruction {
    rat q;
    rat eps;
    interval t;
    interval b;
    interval l;
    interval p;

    /// Largest certified deviation |p - 1| over the enclosure.
    rat p_deviation() const;
};

/// Throws invalid_length for q <= 0, degenerate_triangle when the box
/// certifies t <= 1/2, precision_exceeded if the verification bound cannot
/// be met (retry with smaller eps).
reconstruction reconstruct(const rat& q, isolation t_box, const rat& eps);

} // namespace bisect
