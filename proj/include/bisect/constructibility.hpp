#pragma once

#include <optional>

#include "bisect/irreducibility.hpp"
#include "bisect/roots.hpp"

namespace bisect {

enum class q_kind { rational, symbolic_transcendental };

/**
 * Constructibility decision for the isosceles triangle with base-vertex
 * bisector p = 1 and apex bisector q.
 *
 * degree is [Q(q)(t) : Q(q)] for the geometric root t = l/b (at most 3),
 * and decision = Constructible iff degree is a power of 2, i.e. 1 or 2 --
 * a complete criterion at cubic degree. Exactly one witness is attached:
 *   degree 1 -> rational root t (exact)
 *   degree 2 -> monic quadratic dividing the cubic exactly, bracketing t
 *   degree 3 -> no-root certificate (irreducibility)
 */
struct verdict {
    q_kind kind = q_kind::rational;
    std::optional<rat> q;                               // engaged iff rational
    int degree = 0;                                     // 1 | 2 | 3
    bool constructible = false;                         // degree in {1, 2}
    std::optional<rat> root_t;                          // degree-1 witness
    std::optional<qpoly> quadratic;                     // degree-2 witness
    std::optional<root_search_certificate> certificate; // degree-3 witness
    std::optional<isolation> root_box;                  // rational mode only
};

struct degree_witness {
    int degree;
    std::optional<rat> root;
    std::optional<qpoly> quadratic;
    std::optional<root_search_certificate> certificate;
};

/// Degree of the geometric root t over Q for a specialized bisector cubic:
/// rational t -> 1; t inside the quadratic left after dividing out the
/// rational linear factor -> 2; no rational root -> 3. Throws root_mismatch
/// when t is not a root of fq.
degree_witness minimal_degree(const qpoly& fq, const isolation& t);

/// Full decision for rational q > 0 (throws invalid_length otherwise).
verdict analyze(const rat& q);

/// The transcendental case: symbolic irreducibility of the bisector cubic
/// over Q(q) gives degree 3, hence NotConstructible.
verdict analyze_symbolic();

/// Decision for an arbitrary positive bisector pair (p, q), routed through
/// the general cubic; depends only on q/p.
verdict analyze_pair(const rat& p, const rat& q);

struct family_point {
    rat q;
    rat t;
};

/// Rational-root family: t = 1/(2 - s^2), q = s(t+1)/2 for 0 < s, s^2 < 2;
/// the cubic at q vanishes at t exactly and t > 1/2. Throws
/// degenerate_family outside the range.
family_point constructible_family(const rat& s);

} // namespace bisect
