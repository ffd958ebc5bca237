#include <doctest.h>

#include "bisect/bivariate.hpp"
#include "bisect/constructibility.hpp"
#include "bisect/geometry.hpp"
#include "bisect/sampling.hpp"

using namespace bisect;

namespace {

qpoly make(std::vector<long long> ascending) {
    std::vector<rat> v(ascending.begin(), ascending.end());
    return qpoly(std::move(v));
}

void check_witness(const verdict& v) {
    CHECK(v.constructible == (v.degree == 1 || v.degree == 2));
    if (v.kind == q_kind::symbolic_transcendental)
        return;
    const qpoly fq = eval_q(bisector_cubic(), *v.q);
    if (v.degree == 1) {
        REQUIRE(v.root_t);
        CHECK(fq.eval(*v.root_t).is_zero());
    } else if (v.degree == 2) {
        REQUIRE(v.quadratic);
        CHECK(divrem(fq, *v.quadratic).second.is_zero());
        REQUIRE(v.root_box);
        CHECK(v.quadratic->eval(v.root_box->lo).sign() *
                  v.quadratic->eval(v.root_box->hi).sign() <
              0);
    } else {
        REQUIRE(v.certificate);
        CHECK(!v.certificate->found());
        CHECK(!v.certificate->candidates.empty());
        for (const auto& c : v.certificate->candidates)
            CHECK(!c.residual.is_zero());
    }
}

} // namespace

TEST_CASE("minimal degree of the geometric root") {
    {
        const qpoly fq = eval_q(bisector_cubic(), rat(1));
        const degree_witness w = minimal_degree(fq, geometric_root(fq));
        CHECK(w.degree == 1);
        REQUIRE(w.root);
        CHECK(*w.root == rat(1));
    }
    {
        const qpoly fq = eval_q(bisector_cubic(), rat(1, 2));
        const degree_witness w = minimal_degree(fq, geometric_root(fq));
        CHECK(w.degree == 2);
        REQUIRE(w.quadratic);
        CHECK(*w.quadratic == make({-1, 1, 1})); // X^2 + X - 1
    }
    {
        const qpoly fq = eval_q(bisector_cubic(), rat(2));
        const degree_witness w = minimal_degree(fq, geometric_root(fq));
        CHECK(w.degree == 3);
        REQUIRE(w.certificate);
        CHECK(!w.certificate->found());
    }
    {
        // a bracket from a different cubic is rejected
        const qpoly f1 = eval_q(bisector_cubic(), rat(1));
        const qpoly f2 = eval_q(bisector_cubic(), rat(2));
        CHECK_THROWS_AS(minimal_degree(f1, geometric_root(f2)), root_mismatch);
    }
}

TEST_CASE("analysis of named instances") {
    {
        const verdict v = analyze_symbolic();
        CHECK(v.kind == q_kind::symbolic_transcendental);
        CHECK(!v.constructible);
        CHECK(v.degree == 3);
        REQUIRE(v.certificate);
        CHECK(v.certificate->narrative.size() == 5);
        CHECK(!v.root_box); // no numeric root in symbolic mode
    }
    {
        const verdict v = analyze(rat(1));
        CHECK(v.constructible);
        CHECK(v.degree == 1);
        REQUIRE(v.root_t);
        CHECK(*v.root_t == rat(1));
        // p = q = 1 really is the equilateral triangle
        CHECK(p_sq_from_q_t(rat(1), rat(1)) == rat(1));
    }
    {
        const verdict v = analyze(rat(11, 28));
        CHECK(v.constructible);
        CHECK(v.degree == 1);
        REQUIRE(v.root_t);
        CHECK(*v.root_t == rat(4, 7));
    }
    {
        const verdict v = analyze(rat(1, 2));
        CHECK(v.constructible);
        CHECK(v.degree == 2);
    }
    CHECK(!analyze(rat(2)).constructible);
    CHECK(analyze(rat(2)).degree == 3);
    CHECK(!analyze(rat(3)).constructible);
    CHECK(analyze(rat(3)).degree == 3);

    CHECK_THROWS_AS(analyze(rat(0)), invalid_length);
    CHECK_THROWS_AS(analyze(rat(-1, 2)), invalid_length);
}

TEST_CASE("witnesses re-verify across a spread of q") {
    for (long long n = 1; n <= 12; ++n) {
        check_witness(analyze(rat(n, 4)));
        check_witness(analyze(rat(n, 7)));
    }
    check_witness(analyze_symbolic());
}

TEST_CASE("the rational-root family") {
    {
        const family_point fp = constructible_family(rat(1));
        CHECK(fp.q == rat(1));
        CHECK(fp.t == rat(1));
    }
    {
        const family_point fp = constructible_family(rat(1, 2));
        CHECK(fp.q == rat(11, 28));
        CHECK(fp.t == rat(4, 7));
    }
    CHECK_THROWS_AS(constructible_family(rat(0)), degenerate_family);
    CHECK_THROWS_AS(constructible_family(rat(-1)), degenerate_family);
    CHECK_THROWS_AS(constructible_family(rat(3, 2)), degenerate_family); // s^2 = 9/4 >= 2
}

TEST_CASE("family soundness") {
    sampler rng(83);
    const bipoly f = bisector_cubic();
    for (int i = 0; i < 200; ++i) {
        const family_point fp = constructible_family(rng.family_s());
        CHECK(fp.t > rat(1, 2));
        CHECK(eval_q(f, fp.q).eval(fp.t).is_zero());
        const verdict v = analyze(fp.q);
        CHECK(v.constructible);
        CHECK(v.degree == 1);
    }
}

TEST_CASE("the decision depends only on q/p") {
    sampler rng(89);
    for (int i = 0; i < 20; ++i) {
        const rat q = rng.positive_rational(20, 10);
        const rat s = rng.positive_rational(12, 6);
        const verdict base = analyze(q);
        const verdict scaled = analyze_pair(s, s * q);
        CHECK(scaled.degree == base.degree);
        CHECK(scaled.constructible == base.constructible);
        CHECK(scaled.q == base.q);
        CHECK(scaled.root_t == base.root_t);
        CHECK(scaled.quadratic == base.quadratic);
    }
}
