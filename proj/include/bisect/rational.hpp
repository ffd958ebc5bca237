#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "bisect/errors.hpp"

namespace bisect {

using bigint = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational in canonical form.
 *
 * Invariants (enforced on every construction):
 *  - denominator > 0, sign carried by the numerator
 *  - gcd(|num|, den) = 1
 *  - zero is exactly 0/1
 *
 * Values are immutable after construction; all operations are pure and
 * exact. There is no floating-point anywhere: decimal rendering is a
 * formatting operation (see to_decimal).
 */
class rat {
    bigint num_;
    bigint den_;

    void canonicalize();

public:
    rat() : num_(0), den_(1) {}
    rat(long long n) : num_(n), den_(1) {}
    rat(bigint n) : num_(std::move(n)), den_(1) {}
    rat(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    rat operator-() const {
        rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend rat operator+(const rat& a, const rat& b) {
        return rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rat operator-(const rat& a, const rat& b) {
        return rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rat operator*(const rat& a, const rat& b) {
        return rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rat operator/(const rat& a, const rat& b) {
        if (b.num_ == 0)
            throw division_by_zero();
        return rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    rat& operator+=(const rat& o) { return *this = *this + o; }
    rat& operator-=(const rat& o) { return *this = *this - o; }
    rat& operator*=(const rat& o) { return *this = *this * o; }
    rat& operator/=(const rat& o) { return *this = *this / o; }

    rat reciprocal() const {
        if (num_ == 0)
            throw division_by_zero("reciprocal of zero");
        return rat(den_, num_);
    }

    // Canonical form makes memberwise equality exact value equality.
    friend bool operator==(const rat& a, const rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const rat& a, const rat& b) {
        const bigint l = a.num_ * b.den_;
        const bigint r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

inline rat abs(const rat& a) { return a.sign() < 0 ? -a : a; }

/// a^k for integer k (negative k inverts; 0^0 = 1).
rat pow(const rat& a, int k);

/// 10^k as an integer. Pre: k >= 0.
bigint pow10(int k);

/// Parses `[+-]?digits`, `[+-]?digits/digits`, or `[+-]?digits.digits`.
/// Decimal text is exact ("0.1" is 1/10). Throws parse_error with the
/// offending position, or division_by_zero for "a/0".
rat parse_rat(std::string_view text);

/// "num" when the value is an integer, otherwise "num/den".
std::string to_string(const rat& a);

/// Correctly rounded (round-half-to-even) decimal string with exactly
/// `digits` fractional digits. Pre: digits >= 1.
std::string to_decimal(const rat& a, int digits);

} // namespace bisect
