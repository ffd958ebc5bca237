#include "bisect/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "bisect/irreducibility.hpp"

namespace bisect {

qpoly square_free_part(const qpoly& p) {
    if (p.is_zero())
        throw zero_polynomial();
    if (*p.degree() == 0)
        return qpoly(1);
    const qpoly g = poly_gcd(p, derivative(p));
    const qpoly sf = divrem(p, g).first;
    return content_primitive(sf).second;
}

rat cauchy_root_bound(const qpoly& p) {
    if (p.is_zero() || *p.degree() < 1)
        throw constant_polynomial("root bound of a constant");
    const rat lead = abs(p.lead());
    rat m;
    for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k)
        m = std::max(m, abs(p.coeff(k)) / lead);
    return rat(1) + m;
}

namespace {

// Exactly one simple root of sf in (lo, hi), no rational root of the full
// square-free part inside [lo, hi] and non-root endpoints: shrink by
// bisection until the bracket avoids every point in `avoid`.
isolation make_bracket(const qpoly& g, const qpoly& sf, rat lo, rat hi,
                       const std::vector<rat>& avoid) {
    auto clear_of = [&](const rat& l, const rat& h) {
        for (const auto& r : avoid)
            if (l <= r && r <= h)
                return false;
        return sf.eval(l).sign() != 0 && sf.eval(h).sign() != 0;
    };
    while (!clear_of(lo, hi)) {
        const rat mid = (lo + hi) / rat(2);
        if (g.eval(lo).sign() * g.eval(mid).sign() < 0)
            hi = mid;
        else
            lo = mid;
    }
    return {std::move(lo), std::move(hi), sf, false};
}

} // namespace

std::vector<isolation> isolate_real_roots(const qpoly& p) {
    if (p.is_zero())
        throw zero_polynomial();
    if (*p.degree() < 1)
        throw constant_polynomial();

    const qpoly sf = square_free_part(p);
    const std::vector<rat> exact_hits = rational_roots(sf);

    // divide out the rational roots; the residue has only irrational ones,
    // so bisection midpoints can never collide with a root
    qpoly g = sf;
    for (const auto& r : exact_hits) {
        std::vector<rat> linear{-r, rat(1)};
        g = divrem(g, qpoly(std::move(linear))).first;
    }

    std::vector<isolation> result;
    for (const auto& r : exact_hits)
        result.push_back({r, r, sf, true});

    if (!g.is_zero() && *g.degree() >= 1) {
        const std::vector<qpoly> chain = sturm_chain(g);
        const rat bound = cauchy_root_bound(g);

        struct segment {
            rat lo, hi;
            int count;
        };
        std::vector<segment> stack;
        const int total = sturm_count(chain, -bound, bound);
        stack.push_back({-bound, bound, total});
        while (!stack.empty()) {
            segment s = std::move(stack.back());
            stack.pop_back();
            if (s.count == 0)
                continue;
            if (s.count == 1) {
                result.push_back(make_bracket(g, sf, s.lo, s.hi, exact_hits));
                continue;
            }
            const rat mid = (s.lo + s.hi) / rat(2);
            const int left = sturm_count(chain, s.lo, mid);
            stack.push_back({s.lo, mid, left});
            stack.push_back({mid, s.hi, s.count - left});
        }
    }

    std::sort(result.begin(), result.end(),
              [](const isolation& a, const isolation& b) { return a.lo < b.lo; });
    return result;
}

isolation refine(isolation iv, const rat& eps) {
    if (eps.sign() <= 0)
        throw std::invalid_argument("refine: eps must be positive");
    if (iv.exact)
        return iv;
    int lo_sign = iv.poly.eval(iv.lo).sign();
    while (iv.width() > eps) {
        const rat mid = (iv.lo + iv.hi) / rat(2);
        const int mid_sign = iv.poly.eval(mid).sign();
        if (mid_sign == 0) {
            // landed exactly on the root
            iv.lo = mid;
            iv.hi = mid;
            iv.exact = true;
            return iv;
        }
        if (mid_sign == lo_sign)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

isolation geometric_root(const qpoly& fq) {
    if (fq.is_zero() || *fq.degree() != 3 || !(fq.lead() == rat(2)) ||
        !(fq.coeff(2) == rat(3)) || !(fq.coeff(0) == rat(-1)) || fq.coeff(1).sign() >= 0)
        throw std::invalid_argument("geometric_root: not a specialized bisector cubic");

    const rat half(1, 2);
    const qpoly sf = square_free_part(fq);
    const int in_range = sturm_count(sturm_chain(sf), half, std::nullopt);
    if (in_range != 1)
        throw geometric_root_anomaly("expected exactly one root in (1/2, +inf), found " +
                                     std::to_string(in_range));

    for (isolation iv : isolate_real_roots(fq)) {
        if (iv.exact) {
            if (iv.value() > half)
                return iv;
            continue;
        }
        // the cubic has no root at 1/2 (f(1/2) = -2q^2), so a bracket
        // straddling it can be shrunk off
        while (iv.lo < half && half < iv.hi)
            iv = refine(iv, iv.width() / rat(2));
        if (iv.lo >= half && !(iv.hi < half))
            return iv;
    }
    throw geometric_root_anomaly("certified root in (1/2, +inf) not recovered");
}

} // namespace bisect
