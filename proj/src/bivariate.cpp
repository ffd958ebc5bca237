#include "bisect/bivariate.hpp"

#include <algorithm>

namespace bisect {

bipoly operator+(const bipoly& a, const bipoly& b) {
    std::vector<qpoly> v(std::max(a.xc_.size(), b.xc_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.xcoeff(i) + b.xcoeff(i);
    return bipoly(std::move(v));
}

bipoly operator-(const bipoly& a, const bipoly& b) {
    std::vector<qpoly> v(std::max(a.xc_.size(), b.xc_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.xcoeff(i) - b.xcoeff(i);
    return bipoly(std::move(v));
}

bipoly operator*(const bipoly& a, const bipoly& b) {
    if (a.is_zero() || b.is_zero())
        return bipoly();
    std::vector<qpoly> v(a.xc_.size() + b.xc_.size() - 1);
    for (std::size_t i = 0; i < a.xc_.size(); ++i)
        for (std::size_t j = 0; j < b.xc_.size(); ++j)
            v[i + j] = v[i + j] + a.xc_[i] * b.xc_[j];
    return bipoly(std::move(v));
}

bipoly operator*(const qpoly& s, const bipoly& f) {
    std::vector<qpoly> v;
    v.reserve(f.xc_.size());
    for (const auto& c : f.xc_)
        v.push_back(s * c);
    return bipoly(std::move(v));
}

bipoly pow(const bipoly& f, int k) {
    bipoly result(rat(1));
    bipoly base = f;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base;
        base = base * base;
    }
    return result;
}

bipoly bisector_cubic() {
    // ascending in X: [-1, -4q^2, 3, 2]
    std::vector<qpoly> v;
    v.emplace_back(rat(-1));
    v.push_back(qpoly::monomial(rat(-4), 2));
    v.emplace_back(rat(3));
    v.emplace_back(rat(2));
    return bipoly(std::move(v));
}

bipoly general_cubic(const rat& p) {
    if (p.sign() <= 0)
        throw invalid_length("bisector length p must be positive");
    const rat p2 = p * p;
    std::vector<qpoly> v;
    v.emplace_back(-p2);
    v.push_back(qpoly::monomial(rat(-4), 2));
    v.emplace_back(rat(3) * p2);
    v.emplace_back(rat(2) * p2);
    return bipoly(std::move(v));
}

qpoly eval_q(const bipoly& f, const rat& qval) {
    std::vector<rat> v;
    v.reserve(f.xcoeffs().size());
    for (const auto& c : f.xcoeffs())
        v.push_back(c.eval(qval));
    return qpoly(std::move(v));
}

qpoly subst_x(const bipoly& f, const rat& c) {
    qpoly acc;
    for (auto it = f.xcoeffs().rbegin(); it != f.xcoeffs().rend(); ++it)
        acc = c * acc + *it;
    return acc;
}

qpoly content_x(const bipoly& f) {
    if (f.is_zero())
        throw zero_polynomial();
    qpoly g;
    for (const auto& c : f.xcoeffs()) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? monic(c) : poly_gcd(g, c);
        if (g == qpoly(1))
            break;
    }
    return g;
}

bipoly reverse_x(const bipoly& f) {
    std::vector<qpoly> v(f.xcoeffs().rbegin(), f.xcoeffs().rend());
    return bipoly(std::move(v));
}

std::string render(const bipoly& f, const std::string& xvar, const std::string& qvar) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int k = *f.degree_x(); k >= 0; --k) {
        const qpoly& c = f.xcoeff(static_cast<std::size_t>(k));
        if (c.is_zero())
            continue;
        if (!first)
            out += " + ";
        first = false;

        std::string cs;
        bool need_star = true;
        if (c.is_constant()) {
            const rat& v = c.coeff(0);
            if (v == rat(1) && k > 0) {
                need_star = false; // bare X^k
            } else if (v.sign() > 0) {
                cs = to_string(v);
            } else {
                cs = "(" + to_string(v) + ")";
            }
        } else {
            cs = "(" + render(c, qvar) + ")";
        }

        out += cs;
        if (k > 0) {
            if (need_star && !cs.empty())
                out += "*";
            out += xvar;
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

} // namespace bisect
