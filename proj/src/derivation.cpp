#include "bisect/derivation.hpp"

#include "bisect/bivariate.hpp"

namespace bisect {

// The identities live in Q[b][l] (outer variable l, inner b) except the
// dehomogenization step, which lives in Q[b][t]. All checks are exact.
std::vector<derivation_step> derivation_chain() {
    std::vector<derivation_step> steps;

    const bipoly L = bipoly::x();  // leg l (outer variable)
    const bipoly B = bipoly::q();  // base b (inner variable)
    const rat quarter(1, 4);

    // 4 q^2 with q^2 = l^2 - b^2/4 against the factored form
    {
        const bipoly lhs = rat(4) * (L * L - quarter * (B * B));
        const bipoly rhs = (rat(2) * L + B) * (rat(2) * L - B);
        steps.push_back({"eq1_factored",
                         "4*(l^2 - b^2/4)",
                         "(2*l + b)*(2*l - b)",
                         lhs == rhs});
    }

    // cosine law p^2 = b^2 + x^2 - 2*b*x*cos(theta) with x = b*l/(b+l) and
    // cos(theta) = b/(2*l), cleared by (b+l)^2: the closed form b^2*l*(b+2*l)
    {
        const bipoly bl = B + L;
        const bipoly lhs = (B * B) * (bl * bl) + (B * B) * (L * L) - (B * B * B) * bl;
        const bipoly rhs = (B * B) * L * (B + rat(2) * L);
        steps.push_back({"eq2_closed_form",
                         "(b^2 + x^2 - 2*b*x*cos(theta))*(b+l)^2  [x = b*l/(b+l), cos(theta) = b/(2*l)]",
                         "b^2*l*(b+2*l)",
                         lhs == rhs});
    }

    // b^2*l/(2l-b) = p^2*(b+l)^2/(4q^2), cross-multiplied with both squares
    // replaced by their side expressions
    {
        const bipoly lhs = (rat(4) * L * L - B * B) * (B * B) * L;
        const bipoly rhs = (B * B) * L * (B + rat(2) * L) * (rat(2) * L - B);
        steps.push_back({"combined_relation",
                         "4*q^2*b^2*l  [q^2 = l^2 - b^2/4]",
                         "p^2*(b+l)^2*(2*l-b)  [p^2 = b^2*l*(b+2*l)/(b+l)^2]",
                         lhs == rhs});
    }

    // expanding (b+l)^2*(2l-b) gives the quartic identity
    // 2*p^2*l^3 + 3*p^2*b*l^2 - 4*q^2*b^2*l - p^2*b^3 = 0, cleared by (b+l)^2
    {
        const bipoly bl = B + L;
        const bipoly expand_lhs = bl * bl * (rat(2) * L - B);
        const bipoly expand_rhs =
            rat(2) * (L * L * L) + rat(3) * (B * (L * L)) - B * B * B;
        const bipoly psq = (B * B) * L * (B + rat(2) * L); // p^2*(b+l)^2
        const bipoly qsq4 = rat(4) * (L * L) - B * B;      // 4*q^2
        const bipoly cleared_lhs = psq * expand_rhs;
        const bipoly cleared_rhs = qsq4 * (B * B) * L * (bl * bl);
        steps.push_back({"cleared_identity",
                         "p^2*(2*l^3 + 3*b*l^2 - b^3)",
                         "4*q^2*b^2*l  [both scaled by (b+l)^2]",
                         expand_lhs == expand_rhs && cleared_lhs == cleared_rhs});
    }

    // substituting l = t*b: the quartic is linear in p^2 and q^2, so its
    // two coefficients must pick up exactly b^3
    {
        const bipoly T = bipoly::x(); // shape ratio t (outer), base b (inner)
        const bipoly Bq = bipoly::q();
        const bipoly tb = Bq * T; // l = t*b
        const bipoly coeff_p_lhs =
            rat(2) * (tb * tb * tb) + rat(3) * (Bq * (tb * tb)) - Bq * Bq * Bq;
        const bipoly coeff_p_rhs =
            (Bq * Bq * Bq) * (rat(2) * (T * T * T) + rat(3) * (T * T) - bipoly(rat(1)));
        const bipoly coeff_q_lhs = rat(4) * ((Bq * Bq) * tb);
        const bipoly coeff_q_rhs = rat(4) * ((Bq * Bq * Bq) * T);
        steps.push_back({"dehomogenize",
                         "2*p^2*(t*b)^3 + 3*p^2*b*(t*b)^2 - 4*q^2*b^2*(t*b) - p^2*b^3",
                         "b^3*(2*p^2*t^3 + 3*p^2*t^2 - 4*q^2*t - p^2)  [t = l/b]",
                         coeff_p_lhs == coeff_p_rhs && coeff_q_lhs == coeff_q_rhs});
    }

    // p = 1 turns the general cubic into the bisector cubic
    {
        steps.push_back({"normalize_p1",
                         render(general_cubic(rat(1))),
                         render(bisector_cubic()),
                         general_cubic(rat(1)) == bisector_cubic()});
    }

    return steps;
}

} // namespace bisect
