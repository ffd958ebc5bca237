#include "bisect/irreducibility.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace bisect {

namespace {

// Positive divisors by trial division, ascending. Inputs are constant and
// leading coefficients of cleared cubics; they fit a machine word in
// practice, so division runs natively with a bigint fallback.
std::vector<bigint> positive_divisors(bigint n) {
    if (n < 0)
        n = -n;
    std::vector<bigint> small, large;
    if (n <= std::numeric_limits<unsigned long long>::max()) {
        const auto m = n.convert_to<unsigned long long>();
        for (unsigned long long i = 1; i <= m / i; ++i) {
            if (m % i == 0) {
                small.emplace_back(i);
                if (i != m / i)
                    large.emplace_back(m / i);
            }
        }
    } else {
        for (bigint i = 1; i * i <= n; ++i) {
            if (n % i == 0) {
                small.push_back(i);
                if (i * i != n)
                    large.push_back(n / i);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Divisor candidates +-u/v in lowest terms, descending (positive values
// first so a positive root is reported first when several exist).
std::vector<rat> divisor_candidates(const qpoly& primitive) {
    const bigint a0 = primitive.coeff(0).num();
    const bigint an = primitive.lead().num();
    std::vector<rat> cands;
    for (const auto& u : positive_divisors(a0))
        for (const auto& v : positive_divisors(an)) {
            if (boost::multiprecision::gcd(u, v) != 1)
                continue; // the coprime pair already covers this value
            cands.emplace_back(u, v);
            cands.push_back(-cands.back());
        }
    std::sort(cands.begin(), cands.end(), std::greater<rat>());
    return cands;
}

// Strips X^k, reporting whether 0 was a root.
qpoly strip_zero_root(const qpoly& p, bool& had_zero_root) {
    std::vector<rat> c = p.coeffs();
    std::size_t k = 0;
    while (k < c.size() && c[k].is_zero())
        ++k;
    had_zero_root = k > 0;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return qpoly(std::move(c));
}

} // namespace

std::vector<rat> rational_roots(const qpoly& p) {
    if (p.is_zero())
        throw zero_polynomial();
    if (*p.degree() < 1)
        throw constant_polynomial();

    bool zero_root = false;
    const qpoly stripped = strip_zero_root(p, zero_root);
    std::vector<rat> roots;
    if (zero_root)
        roots.emplace_back(0);

    if (!stripped.is_constant()) {
        const qpoly primitive = content_primitive(stripped).second;
        for (const auto& c : divisor_candidates(primitive))
            if (primitive.eval(c).is_zero())
                roots.push_back(c);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

// Transpose of the coefficient table: B_j(c) = sum_k [q^j](a_k) c^k, the
// coefficient of q^j in subst_x(F, c) viewed as a polynomial in c.
std::vector<qpoly> q_coefficient_polys(const bipoly& F) {
    int jmax = 0;
    for (const auto& a : F.xcoeffs())
        if (!a.is_zero())
            jmax = std::max(jmax, *a.degree());
    std::vector<qpoly> out;
    for (int j = 0; j <= jmax; ++j) {
        std::vector<rat> in_c;
        in_c.reserve(F.xcoeffs().size());
        for (const auto& a : F.xcoeffs())
            in_c.push_back(a.coeff(static_cast<std::size_t>(j)));
        out.emplace_back(std::move(in_c));
    }
    return out;
}

} // namespace

root_search_certificate fraction_field_root_search(const bipoly& F) {
    if (F.is_zero())
        throw zero_polynomial();
    if (*F.degree_x() < 1)
        throw constant_polynomial();
    const qpoly& lead = F.lead();
    const qpoly& constant = F.xcoeff(0);
    if (!lead.is_constant() || !constant.is_constant() || constant.is_zero())
        throw unsupported_coefficients(
            "divisor search needs rational nonzero leading and constant X-coefficients");

    root_search_certificate cert;
    cert.mode = search_mode::symbolic_q;

    // content of F across X-coefficients divides the constant (a unit), so
    // F is primitive and Gauss' theorem moves the question to Q[q][X]
    cert.narrative.push_back({"primitivity", {render(content_x(F), "q")}, std::nullopt});
    cert.narrative.push_back({"divisor_constraint_g", {render(constant, "q")}, std::nullopt});
    cert.narrative.push_back({"divisor_constraint_h", {render(lead, "q")}, std::nullopt});

    // a root 1/h satisfies the reversed equation; comparing q-degrees of
    // its sides forces h to be a constant c
    const bipoly rev = reverse_x(F);
    std::vector<qpoly> rev_low(rev.xcoeffs().begin(), rev.xcoeffs().end() - 1);
    const bipoly h_lhs(std::move(rev_low));
    const bipoly h_rhs = bipoly::monomial(-rev.lead(), *rev.degree_x());
    cert.narrative.push_back(
        {"degree_argument", {render(h_lhs, "h", "q"), render(h_rhs, "h", "q")}, std::nullopt});

    // candidates: rational roots of the highest nonvanishing q-coefficient
    // of subst_x(F, c) as a polynomial in c
    const std::vector<qpoly> by_q_power = q_coefficient_polys(F);
    std::size_t jstar = by_q_power.size() - 1;
    while (jstar > 0 && by_q_power[jstar].is_zero())
        --jstar;
    const qpoly& forcing = by_q_power[jstar];
    std::vector<rat> candidates = rational_roots(forcing);
    std::sort(candidates.begin(), candidates.end(), std::greater<rat>());

    proof_step closing{"constant_case_contradiction", {render(forcing, "c")}, std::nullopt};
    for (const auto& c : candidates) {
        qpoly residual = subst_x(F, c);
        cert.candidates.push_back({c, rat(1), residual});
        closing.residual = render(residual, "q");
        if (residual.is_zero()) {
            cert.root = c;
            closing.tag = "constant_root_found";
            break;
        }
    }
    cert.narrative.push_back(std::move(closing));
    return cert;
}

irreducibility_result symbolic_irreducibility(const bipoly& F) {
    if (F.is_zero())
        throw zero_polynomial();
    const int deg = *F.degree_x();
    if (deg < 2 || deg > 3)
        throw unsupported_degree("no-root criterion applies to degrees 2 and 3 only, got " +
                                 std::to_string(deg));
    if (!(content_x(F) == qpoly(1)))
        throw not_primitive("content across X-coefficients is not a unit");

    root_search_certificate cert = fraction_field_root_search(F);
    irreducibility_result res{!cert.found(), std::move(cert), std::nullopt};
    if (!res.irreducible)
        res.witness = res.certificate.root;
    return res;
}

qpoly h_equation_check(const rat& c) {
    // c^2 (4q^2 + c) - (3c + 2), ascending in q
    std::vector<rat> v{c * c * c - rat(3) * c - rat(2), rat(0), rat(4) * c * c};
    return qpoly(std::move(v));
}

root_search_certificate rational_root_certificate(const qpoly& p) {
    if (p.is_zero())
        throw zero_polynomial();
    if (*p.degree() < 1)
        throw constant_polynomial();

    root_search_certificate cert;
    cert.mode = search_mode::rational_q;

    bool zero_root = false;
    const qpoly stripped = strip_zero_root(p, zero_root);
    if (zero_root) {
        cert.candidates.push_back({rat(0), rat(1), qpoly()});
        cert.root = rat(0);
    }
    const qpoly primitive = content_primitive(stripped.is_constant() ? p : stripped).second;
    cert.narrative.push_back({"clear_denominators", {render(primitive)}, std::nullopt});
    cert.narrative.push_back({"divisor_candidates",
                              {to_string(primitive.coeff(0)), to_string(primitive.lead())},
                              std::nullopt});

    if (!stripped.is_constant()) {
        for (const auto& c : divisor_candidates(primitive)) {
            qpoly residual(primitive.eval(c));
            cert.candidates.push_back({c, rat(1), residual});
            if (residual.is_zero() && !cert.root)
                cert.root = c;
        }
    }
    return cert;
}

} // namespace bisect
