#include "bisect/constructibility.hpp"

#include <stdexcept>

#include "bisect/bivariate.hpp"

namespace bisect {

namespace {

qpoly linear_factor(const rat& root) {
    std::vector<rat> v{-root, rat(1)};
    return qpoly(std::move(v));
}

} // namespace

degree_witness minimal_degree(const qpoly& fq, const isolation& t) {
    if (t.exact) {
        if (!fq.eval(t.value()).is_zero())
            throw root_mismatch("exact t is not a root of the cubic");
    } else {
        if (fq.eval(t.lo).sign() * fq.eval(t.hi).sign() >= 0)
            throw root_mismatch("bracket does not straddle a root of the cubic");
    }

    const std::vector<rat> roots = rational_roots(fq);
    if (t.exact)
        return {1, t.value(), std::nullopt, std::nullopt};

    if (roots.empty())
        return {3, std::nullopt, std::nullopt, rational_root_certificate(fq)};

    // peel off the rational linear factors; the geometric root is
    // irrational here, so the residue must be the quadratic that holds it
    qpoly residue = fq;
    for (const auto& r : roots) {
        auto [quot, rem] = divrem(residue, linear_factor(r));
        if (!rem.is_zero())
            throw std::logic_error("minimal_degree: rational root does not divide");
        residue = std::move(quot);
    }
    if (residue.is_zero() || *residue.degree() != 2)
        throw root_mismatch("irrational bracket but no quadratic residue");
    const qpoly quad = monic(residue);
    if (quad.eval(t.lo).sign() * quad.eval(t.hi).sign() >= 0)
        throw root_mismatch("quadratic residue does not bracket t");
    return {2, std::nullopt, quad, std::nullopt};
}

namespace {

verdict verdict_from_cubic(const qpoly& fq) {
    const isolation t = geometric_root(fq);
    degree_witness w = minimal_degree(fq, t);
    verdict v;
    v.kind = q_kind::rational;
    v.degree = w.degree;
    v.constructible = w.degree == 1 || w.degree == 2;
    v.root_t = std::move(w.root);
    v.quadratic = std::move(w.quadratic);
    v.certificate = std::move(w.certificate);
    v.root_box = t;
    return v;
}

} // namespace

verdict analyze(const rat& q) {
    if (q.sign() <= 0)
        throw invalid_length("apex bisector q must be positive");
    verdict v = verdict_from_cubic(eval_q(bisector_cubic(), q));
    v.q = q;
    return v;
}

verdict analyze_symbolic() {
    irreducibility_result res = symbolic_irreducibility(bisector_cubic());
    if (!res.irreducible)
        throw std::logic_error("bisector cubic unexpectedly reducible over Q(q)");
    verdict v;
    v.kind = q_kind::symbolic_transcendental;
    v.degree = 3;
    v.constructible = false;
    v.certificate = std::move(res.certificate);
    return v;
}

verdict analyze_pair(const rat& p, const rat& q) {
    if (q.sign() <= 0)
        throw invalid_length("apex bisector q must be positive");
    qpoly fq = eval_q(general_cubic(p), q); // throws invalid_length for p <= 0
    // the leading coefficient 2p^2 is a unit; normalizing by p^2 recovers
    // a specialized bisector cubic with the same roots
    fq = (p * p).reciprocal() * fq;
    verdict v = verdict_from_cubic(fq);
    v.q = q / p;
    return v;
}

family_point constructible_family(const rat& s) {
    if (s.sign() <= 0)
        throw degenerate_family("family parameter s must be positive");
    const rat s_sq = s * s;
    if (!(s_sq < rat(2)))
        throw degenerate_family("family parameter needs s^2 < 2");
    const rat t = (rat(2) - s_sq).reciprocal();
    const rat q = s * (t + rat(1)) / rat(2);
    return {q, t};
}

} // namespace bisect
