#include "bisect/geometry.hpp"

#include <stdexcept>

namespace bisect {

namespace {

void require_triangle(const rat& l, const rat& b) {
    if (b.sign() <= 0 || !(rat(2) * l > b))
        throw degenerate_triangle("need 2l > b > 0, got l = " + to_string(l) +
                                  ", b = " + to_string(b));
}

} // namespace

rat q_sq_from_sides(const rat& l, const rat& b) {
    require_triangle(l, b);
    const rat qsq = l * l - b * b / rat(4);
    const rat factored = (rat(2) * l + b) * (rat(2) * l - b);
    if (!(factored == rat(4) * qsq))
        throw std::logic_error("q_sq_from_sides: factored form disagrees");
    return qsq;
}

rat p_sq_from_sides(const rat& l, const rat& b) {
    require_triangle(l, b);
    const rat closed = b * b * l * (b + rat(2) * l) / ((b + l) * (b + l));
    const rat chain = p_sq_cosine_chain(l, b);
    if (!(closed == chain))
        throw std::logic_error("p_sq_from_sides: cosine-law chain disagrees");
    return closed;
}

rat p_sq_cosine_chain(const rat& l, const rat& b) {
    require_triangle(l, b);
    const rat cos_theta = b / (rat(2) * l);
    const rat x = b * l / (b + l);
    return b * b + x * x - rat(2) * b * x * cos_theta;
}

rat p_sq_bisector_oracle(const rat& l, const rat& b) {
    require_triangle(l, b);
    const rat ratio = l / (l + b);
    return l * b * (rat(1) - ratio * ratio);
}

rat p_sq_from_q_t(const rat& q, const rat& t) {
    if (q.sign() <= 0)
        throw invalid_length("apex bisector q must be positive");
    const rat half(1, 2);
    if (!(t > half))
        throw degenerate_triangle("shape ratio t = l/b must exceed 1/2");
    const rat four_qsq = rat(4) * q * q;
    const rat denom = rat(4) * t * t - rat(1);
    const rat one_plus_t = rat(1) + t;
    return four_qsq / denom * t * (rat(1) + rat(2) * t) / (one_plus_t * one_plus_t);
}

rat cubic_residual(const rat& l, const rat& b, const rat& p_sq, const rat& q_sq) {
    return rat(2) * p_sq * l * l * l + rat(3) * p_sq * b * l * l -
           rat(4) * q_sq * b * b * l - p_sq * b * b * b;
}

triangle_instance forward_instance(const rat& l, const rat& b) {
    triangle_instance tri;
    tri.l = l;
    tri.b = b;
    tri.q_sq = q_sq_from_sides(l, b);
    tri.p_sq = p_sq_from_sides(l, b);
    tri.cos_theta = b / (rat(2) * l);
    tri.cp_x = b * l / (b + l);
    if (!cubic_residual(l, b, tri.p_sq, tri.q_sq).is_zero())
        throw std::logic_error("forward_instance: cubic residual is nonzero");
    return tri;
}

rat reconstruction::p_deviation() const {
    return std::max(abs(p.lo - rat(1)), abs(p.hi - rat(1)));
}

reconstruction reconstruct(const rat& q, isolation t_box, const rat& eps) {
    if (q.sign() <= 0)
        throw invalid_length("apex bisector q must be positive");
    if (eps.sign() <= 0)
        throw std::invalid_argument("reconstruct: eps must be positive");

    const rat half(1, 2);
    if (!t_box.exact && !(t_box.hi > half))
        throw degenerate_triangle("certified shape ratio t <= 1/2");
    // shrink the bracket until it certifies t > 1/2 (refinement may promote
    // it to an exact rational hit along the way)
    for (int i = 0; i < 4096 && !t_box.exact && !(t_box.lo > half); ++i)
        t_box = refine(t_box, t_box.width() / rat(2));
    if (t_box.exact ? !(t_box.value() > half) : !(t_box.lo > half))
        throw degenerate_triangle("shape ratio does not certify t > 1/2");

    const rat tolerance = rat(100) * eps;
    rat prec = eps / rat(1024);
    for (int attempt = 0; attempt < 32; ++attempt) {
        if (!t_box.exact)
            t_box = refine(t_box, prec);
        const interval t_iv = t_box.exact ? interval(t_box.value())
                                          : interval(t_box.lo, t_box.hi);
        const interval four_t_sq_minus_1 =
            interval(rat(4)) * t_iv * t_iv - interval(rat(1));
        const interval root = sqrt_enclosure(four_t_sq_minus_1, prec);
        const interval b_iv = interval(rat(2) * q) / root;
        const interval l_iv = t_iv * b_iv;

        // recompute the base-vertex bisector from the certified sides
        const interval sum = b_iv + l_iv;
        const interval p_sq_iv =
            b_iv * b_iv * l_iv * (b_iv + interval(rat(2)) * l_iv) / (sum * sum);
        const interval p_iv = sqrt_enclosure(p_sq_iv, prec);

        reconstruction rec{q, eps, t_iv, b_iv, l_iv, p_iv};
        if (b_iv.width() <= eps && l_iv.width() <= eps && rec.p_deviation() <= tolerance)
            return rec;
        prec = prec / rat(64);
    }
    throw precision_exceeded("reconstruct: could not certify |p - 1| within tolerance");
}

} // namespace bisect
