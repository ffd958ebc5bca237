#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisect/bivariate.hpp"
#include "bisect/polynomial.hpp"

namespace bisect {

/// All rational roots of p, sorted ascending without duplicates: clear
/// denominators to a primitive integer polynomial, then test every
/// +-(divisor of constant)/(divisor of leading) by exact evaluation.
/// Throws constant_polynomial for degree < 1.
std::vector<rat> rational_roots(const qpoly& p);

enum class search_mode { rational_q, symbolic_q };

/// One tested candidate root g/h with the exact residual of the polynomial
/// at it (a constant for rational mode, an element of Q[q] for symbolic
/// mode). Nonzero residual = candidate rejected.
struct candidate_check {
    rat g;
    rat h;
    qpoly residual;
};

/// One narrative step of the proof, tagged, with its exact polynomials in
/// rendered form; the closing step carries the decisive residual (exact
/// per-candidate residuals live in the candidate list).
struct proof_step {
    std::string tag;
    std::vector<std::string> polynomials;
    std::optional<std::string> residual;
};

/**
 * Machine-checkable record of a root search: every candidate with its
 * exact residual, the conclusion, and the ordered narrative. In symbolic
 * mode the narrative is, in order: primitivity (Gauss), the divisor
 * constraint on g, the divisor constraint on h, the degree argument
 * forcing a constant, and the constant-case outcome.
 */
struct root_search_certificate {
    search_mode mode = search_mode::symbolic_q;
    std::vector<candidate_check> candidates;
    std::optional<rat> root; // engaged iff a root was found
    std::vector<proof_step> narrative;

    bool found() const { return root.has_value(); }
};

/// Divisor-based search for roots of F in the fraction field Q(q) of the
/// UFD Q[q]. Pre: leading and constant X-coefficients are nonzero
/// rationals (degree 0 in q) -- then any root g/h has g, h units, so the
/// candidates are rational constants and the test is subst_x(F, c) = 0.
/// Throws unsupported_coefficients when the precondition fails.
root_search_certificate fraction_field_root_search(const bipoly& F);

struct irreducibility_result {
    bool irreducible;
    root_search_certificate certificate;
    std::optional<rat> witness; // a root in Q(q) when reducible
};

/// Degree <= 3 criterion over Q(q): irreducible iff no root in Q(q).
/// Pre: deg_X in {2, 3} (else unsupported_degree) and content_x a unit
/// (else not_primitive, since Gauss no longer applies directly).
irreducibility_result symbolic_irreducibility(const bipoly& F);

/// Replays the constant case of the divisor search for the bisector cubic:
/// the element c^2(4q^2 + c) - (3c + 2) of Q[q], which is nonzero for
/// every rational c.
qpoly h_equation_check(const rat& c);

/// Rational-mode certificate for a univariate polynomial: full divisor
/// candidate list with exact residuals. Pre: deg >= 1.
root_search_certificate rational_root_certificate(const qpoly& p);

} // namespace bisect
