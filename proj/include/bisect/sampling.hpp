#pragma once

#include <cstdint>
#include <random>

#include "bisect/rational.hpp"

namespace bisect {

/// Deterministic rational sampler for the randomized suites. A fixed seed
/// reproduces the identical sample sequence (values are drawn with modular
/// reduction of the raw engine output, so the stream does not depend on
/// distribution internals).
class sampler {
    std::mt19937_64 eng_;

public:
    explicit sampler(std::uint64_t seed) : eng_(seed) {}

    long long integer(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(eng_() % span);
    }

    /// num in [-max_num, max_num], den in [1, max_den]; any sign.
    rat rational(long long max_num, long long max_den) {
        return rat(bigint(integer(-max_num, max_num)), bigint(integer(1, max_den)));
    }

    /// Strictly positive.
    rat positive_rational(long long max_num, long long max_den) {
        return rat(bigint(integer(1, max_num)), bigint(integer(1, max_den)));
    }

    /// q in (0, 100].
    rat q_in_0_100() {
        const long long d = integer(1, 50);
        return rat(bigint(integer(1, 100 * d)), bigint(d));
    }

    /// Shape ratio t > 1/2.
    rat t_above_half() {
        return rat(1, 2) + positive_rational(40, 20);
    }

    /// Family parameter with 0 < s and s^2 < 2. Denominators stay small so
    /// the divisor enumeration over the induced q stays cheap.
    rat family_s() {
        while (true) {
            const long long d = integer(1, 12);
            const long long n = integer(1, 2 * d);
            if (bigint(n) * n < 2 * bigint(d) * d)
                return rat(bigint(n), bigint(d));
        }
    }
};

} // namespace bisect
