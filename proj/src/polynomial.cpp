#include "bisect/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisect {

qpoly operator+(const qpoly& a, const qpoly& b) {
    std::vector<rat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) + b.coeff(i);
    return qpoly(std::move(v));
}

qpoly operator-(const qpoly& a, const qpoly& b) {
    std::vector<rat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) - b.coeff(i);
    return qpoly(std::move(v));
}

qpoly operator*(const qpoly& a, const qpoly& b) {
    if (a.is_zero() || b.is_zero())
        return qpoly();
    std::vector<rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return qpoly(std::move(v));
}

qpoly operator*(const rat& s, const qpoly& p) {
    std::vector<rat> v;
    v.reserve(p.c_.size());
    for (const auto& a : p.c_)
        v.push_back(s * a);
    return qpoly(std::move(v));
}

qpoly derivative(const qpoly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1)
        return qpoly();
    std::vector<rat> v(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        v[k - 1] = rat(static_cast<long long>(k)) * c[k];
    return qpoly(std::move(v));
}

std::pair<qpoly, qpoly> divrem(const qpoly& a, const qpoly& b) {
    if (b.is_zero())
        throw division_by_zero("polynomial division by zero");
    const int db = *b.degree();
    std::vector<rat> rem(a.coeffs().begin(), a.coeffs().end());
    int dr = a.is_zero() ? -1 : *a.degree();
    if (dr < db)
        return {qpoly(), a};

    std::vector<rat> quot(static_cast<std::size_t>(dr - db) + 1);
    const rat lead_inv = b.lead().reciprocal();
    while (dr >= db) {
        const rat factor = rem[static_cast<std::size_t>(dr)] * lead_inv;
        quot[static_cast<std::size_t>(dr - db)] = factor;
        for (int k = 0; k <= db; ++k)
            rem[static_cast<std::size_t>(dr - db + k)] -= factor * b.coeff(static_cast<std::size_t>(k));
        // the leading term cancels exactly; find the new degree
        --dr;
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)].is_zero())
            --dr;
    }
    rem.resize(static_cast<std::size_t>(dr + 1));
    return {qpoly(std::move(quot)), qpoly(std::move(rem))};
}

qpoly monic(const qpoly& p) {
    if (p.is_zero())
        throw zero_polynomial();
    return p.lead().reciprocal() * p;
}

std::pair<rat, qpoly> content_primitive(const qpoly& p) {
    if (p.is_zero())
        throw zero_polynomial();
    bigint den_lcm = 1;
    for (const auto& a : p.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, a.den());
    bigint num_gcd = 0;
    for (const auto& a : p.coeffs()) {
        // coefficient scaled to an integer: num * (den_lcm / den)
        num_gcd = boost::multiprecision::gcd(num_gcd, a.num() * (den_lcm / a.den()));
    }
    rat content(num_gcd, den_lcm);
    if (p.lead().sign() < 0)
        content = -content;
    qpoly primitive = content.reciprocal() * p;
    return {content, primitive};
}

qpoly poly_gcd(const qpoly& a, const qpoly& b) {
    if (a.is_zero() && b.is_zero())
        throw zero_polynomial("gcd of two zero polynomials");
    qpoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        qpoly r2 = divrem(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return monic(r0);
}

std::vector<qpoly> sturm_chain(const qpoly& p) {
    if (p.is_zero())
        throw zero_polynomial();
    std::vector<qpoly> chain;
    chain.push_back(p);
    qpoly d = derivative(p);
    if (d.is_zero())
        return chain;
    chain.push_back(std::move(d));
    // exact rational remainders; coefficient growth is a non-issue at the
    // degrees handled here
    while (true) {
        const qpoly& prev = chain[chain.size() - 2];
        const qpoly& last = chain.back();
        qpoly r = -divrem(prev, last).second;
        if (r.is_zero())
            break;
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

// Sign of poly at a finite point or at an infinite end.
int sign_at(const qpoly& p, const std::optional<rat>& point, bool positive_end) {
    if (p.is_zero())
        return 0;
    if (point)
        return p.eval(*point).sign();
    const int lead_sign = p.lead().sign();
    if (positive_end)
        return lead_sign;
    return (*p.degree() % 2 == 0) ? lead_sign : -lead_sign;
}

int variations(const std::vector<qpoly>& chain, const std::optional<rat>& point, bool positive_end) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, point, positive_end);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const std::vector<qpoly>& chain,
                const std::optional<rat>& lo,
                const std::optional<rat>& hi) {
    if (chain.empty())
        throw zero_polynomial("empty Sturm chain");
    if (lo && hi && !(*lo < *hi))
        throw std::invalid_argument("sturm_count: lo must be < hi");
    const qpoly& head = chain.front();
    if ((lo && head.eval(*lo).is_zero()) || (hi && head.eval(*hi).is_zero()))
        throw endpoint_is_root();
    return variations(chain, lo, false) - variations(chain, hi, true);
}

std::string render(const qpoly& p, const std::string& var) {
    if (p.is_zero())
        return "0";
    std::string out;
    const int deg = *p.degree();
    bool first = true;
    for (int k = deg; k >= 0; --k) {
        const rat& c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative)
                out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const rat mag = abs(c);
        const bool unit = mag == rat(1);
        if (k == 0) {
            out += to_string(mag);
        } else {
            if (!unit) {
                out += to_string(mag);
                out += "*";
            }
            out += var;
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

} // namespace bisect
