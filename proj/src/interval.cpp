#include "bisect/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisect {

interval::interval(rat l, rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo)
        throw std::invalid_argument("interval: lo > hi");
}

interval operator+(const interval& a, const interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

interval operator-(const interval& a, const interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

interval operator*(const interval& a, const interval& b) {
    const rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

interval operator/(const interval& a, const interval& b) {
    if (b.contains(rat(0)))
        throw division_by_zero("interval division by an interval containing zero");
    const interval recip(b.hi.reciprocal(), b.lo.reciprocal());
    return a * recip;
}

namespace {

// floor(sqrt(n*d) * s) / (d*s) brackets sqrt(n/d) from below with error
// < 1/(d*s); choosing s >= 1/(d*prec) meets the requested precision.
std::pair<bigint, bigint> sqrt_scaled(const rat& x, const rat& prec) {
    if (x.sign() < 0)
        throw std::invalid_argument("sqrt of a negative rational");
    if (prec.sign() <= 0)
        throw std::invalid_argument("sqrt precision must be positive");
    const bigint& n = x.num();
    const bigint& d = x.den();
    // s = ceil(prec.den / (d * prec.num))
    bigint denom = d * prec.num();
    bigint s = (prec.den() + denom - 1) / denom;
    if (s < 1)
        s = 1;
    const bigint radicand = n * d * s * s;
    const bigint root = boost::multiprecision::sqrt(radicand);
    return {root, d * s};
}

} // namespace

rat sqrt_below(const rat& x, const rat& prec) {
    auto [root, scale] = sqrt_scaled(x, prec);
    return rat(root, scale);
}

rat sqrt_above(const rat& x, const rat& prec) {
    auto [root, scale] = sqrt_scaled(x, prec);
    // exact squares should not be rounded outward
    rat lower(root, scale);
    if (lower * lower == x)
        return lower;
    return rat(root + 1, scale);
}

interval sqrt_enclosure(const interval& x, const rat& prec) {
    return {sqrt_below(x.lo, prec), sqrt_above(x.hi, prec)};
}

} // namespace bisect
