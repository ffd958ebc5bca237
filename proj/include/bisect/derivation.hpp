#pragma once

#include <string>
#include <vector>

namespace bisect {

/// One verified link of the symbolic chain from the triangle relations to
/// the bisector cubic. lhs/rhs state the identity; verified comes from
/// exact polynomial comparison, never from the strings.
struct derivation_step {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool verified;
};

/// The six-step chain: apex-bisector relation in factored form, the
/// cosine-law closed form for the base-vertex bisector, the combined
/// relation, the cleared quartic identity, the division by b^3 (shape
/// ratio t = l/b), and the p = 1 normalization. Every step is checked by
/// exact bivariate polynomial arithmetic.
std::vector<derivation_step> derivation_chain();

} // namespace bisect
