#include "bisect/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bisect {

void rat::canonicalize() {
    if (den_ == 0)
        throw division_by_zero();
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const bigint g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

bigint pow10(int k) {
    bigint v = 1;
    for (int i = 0; i < k; ++i)
        v *= 10;
    return v;
}

rat pow(const rat& a, int k) {
    if (k < 0)
        return pow(a.reciprocal(), -k);
    rat result(1);
    rat base = a;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1)
            result *= base;
        base *= base;
    }
    return result;
}

namespace {

// Consumes a run of [0-9] starting at `i`; throws when empty.
bigint scan_digits(std::string_view s, std::size_t& i) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == start)
        throw parse_error("expected digit", start);
    return bigint(std::string(s.substr(start, i - start)));
}

} // namespace

rat parse_rat(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    bigint intpart = scan_digits(text, i);

    if (i == text.size()) {
        if (negative)
            intpart = -intpart;
        return rat(std::move(intpart));
    }
    if (text[i] == '/') {
        ++i;
        bigint den = scan_digits(text, i);
        if (i != text.size())
            throw parse_error("trailing characters", i);
        if (den == 0)
            throw division_by_zero("denominator is zero");
        if (negative)
            intpart = -intpart;
        return rat(std::move(intpart), std::move(den));
    }
    if (text[i] == '.') {
        ++i;
        const std::size_t frac_start = i;
        bigint frac = scan_digits(text, i);
        if (i != text.size())
            throw parse_error("trailing characters", i);
        const std::size_t frac_len = i - frac_start;
        bigint scale = 1;
        for (std::size_t k = 0; k < frac_len; ++k)
            scale *= 10;
        bigint num = intpart * scale + frac;
        if (negative)
            num = -num;
        return rat(std::move(num), std::move(scale));
    }
    throw parse_error("unexpected character", i);
}

std::string to_string(const rat& a) {
    std::string s = a.num().str();
    if (!a.is_integer()) {
        s += '/';
        s += a.den().str();
    }
    return s;
}

std::string to_decimal(const rat& a, int digits) {
    if (digits < 1)
        throw std::invalid_argument("to_decimal: digits must be >= 1");

    const bool negative = a.sign() < 0;
    const bigint n = boost::multiprecision::abs(a.num());
    const bigint& d = a.den();
    const bigint scale = pow10(digits);

    bigint q, r;
    boost::multiprecision::divide_qr(n * scale, d, q, r);
    // round half to even on the last kept digit
    const bigint twice = r * 2;
    if (twice > d || (twice == d && boost::multiprecision::bit_test(q, 0)))
        ++q;

    bigint ip, fp;
    boost::multiprecision::divide_qr(q, scale, ip, fp);

    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');

    std::string out;
    if (negative && q != 0)
        out += '-';
    out += ip.str();
    out += '.';
    out += frac;
    return out;
}

} // namespace bisect
