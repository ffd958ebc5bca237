// Acceptance suite: every criterion prints one [PASS]/[FAIL] line with its
// runtime; the process exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "bisect/bivariate.hpp"
#include "bisect/cli.hpp"
#include "bisect/constructibility.hpp"
#include "bisect/derivation.hpp"
#include "bisect/geometry.hpp"
#include "bisect/report.hpp"
#include "bisect/sampling.hpp"

using namespace bisect;

namespace {

struct check_log {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const rat eps12(bigint(1), pow10(12));
const rat tol10(bigint(1), pow10(10));

// 1. symbolic theorem reproduction, certificate replays the full chain
void criterion_symbolic(check_log& log) {
    const verdict v = analyze_symbolic();
    log.require(!v.constructible && v.degree == 3, "expected NotConstructible at degree 3");
    log.require(v.certificate.has_value(), "certificate missing");
    if (!v.certificate)
        return;
    const auto& cert = *v.certificate;
    const std::vector<std::string> tags{"primitivity", "divisor_constraint_g",
                                        "divisor_constraint_h", "degree_argument",
                                        "constant_case_contradiction"};
    log.require(cert.narrative.size() == tags.size(), "narrative length != 5");
    for (std::size_t i = 0; i < tags.size() && i < cert.narrative.size(); ++i)
        log.require(cert.narrative[i].tag == tags[i], "narrative order broken at " + tags[i]);

    log.require(cert.narrative[0].polynomials == std::vector<std::string>{"1"},
                "primitivity content is not the unit");
    log.require(cert.narrative[1].polynomials == std::vector<std::string>{"-1"},
                "divisor constraint on g should cite the constant coefficient -1");
    log.require(cert.narrative[2].polynomials == std::vector<std::string>{"2"},
                "divisor constraint on h should cite the leading coefficient 2");
    log.require(cert.narrative[3].polynomials ==
                    std::vector<std::string>{"(-4*q^2)*h^2 + 3*h + 2", "h^3"},
                "reversed-equation identity mismatch");
    log.require(cert.narrative[4].polynomials.front() == "-4*c",
                "q^2-coefficient should force -4c = 0");
    log.require(cert.candidates.size() == 1 && cert.candidates[0].g == rat(0) &&
                    cert.candidates[0].residual == qpoly(-1),
                "constant case should test c = 0 with residual -1");
    log.require(!cert.found(), "no root may be found");
    log.require(h_equation_check(rat(0)) == qpoly(-2),
                "constant-case equation at c = 0 must leave residual -2");

    // the CLI surface agrees: exit code 3 and a degree-3 JSON verdict
    const std::string tmp = "/tmp/bisectorc_acceptance_symbolic.json";
    const std::string cmd =
        std::string(BISECTORC_BIN) + " analyze --q symbolic --format json --out " + tmp;
    const int status = std::system(cmd.c_str());
    log.require(WIFEXITED(status) && WEXITSTATUS(status) == 3, "CLI exit code is not 3");
    std::ifstream in(tmp);
    log.require(in.good(), "CLI wrote no report");
    if (in.good()) {
        const nlohmann::json j = nlohmann::json::parse(in);
        log.require(j.at("verdict").at("degree").get<int>() == 3 &&
                        j.at("verdict").at("decision").get<std::string>() == "NotConstructible",
                    "CLI JSON verdict mismatch");
    }
    std::remove(tmp.c_str());
}

// 2. forward exact identity on 1000 seeded triangles, zero tolerance
void criterion_forward(check_log& log) {
    sampler rng(1729);
    for (int i = 0; i < 1000; ++i) {
        const rat b = rng.positive_rational(60, 30);
        const rat l = rng.t_above_half() * b;
        const rat residual = cubic_residual(l, b, p_sq_from_sides(l, b), q_sq_from_sides(l, b));
        log.require(residual.is_zero(),
                    "nonzero residual at l = " + to_string(l) + ", b = " + to_string(b));
        if (!log.ok)
            return;
    }
}

// 3. root <=> unit-bisector equivalence, 500 random + 200 family instances
void criterion_equivalence(check_log& log) {
    sampler rng(1729);
    const bipoly f = bisector_cubic();
    for (int i = 0; i < 500; ++i) {
        const rat q = rng.positive_rational(50, 25);
        const rat t = rng.t_above_half();
        const bool unit_p = p_sq_from_q_t(q, t) == rat(1);
        const bool root = eval_q(f, q).eval(t).is_zero();
        log.require(unit_p == root, "equivalence fails at q = " + to_string(q) +
                                        ", t = " + to_string(t));
        if (!log.ok)
            return;
    }
    for (int i = 0; i < 200; ++i) {
        const family_point fp = constructible_family(rng.family_s());
        log.require(p_sq_from_q_t(fp.q, fp.t) == rat(1) &&
                        eval_q(f, fp.q).eval(fp.t).is_zero(),
                    "family instance fails at q = " + to_string(fp.q));
        if (!log.ok)
            return;
    }
}

// 4. exactly one geometric root for 200 seeded q in (0, 100]
void criterion_unique_root(check_log& log) {
    sampler rng(1729);
    const bipoly f = bisector_cubic();
    const rat half(1, 2);
    for (int i = 0; i < 200; ++i) {
        const rat q = rng.q_in_0_100();
        const qpoly fq = eval_q(f, q);
        const int count = sturm_count(sturm_chain(square_free_part(fq)), half, std::nullopt);
        log.require(count == 1, "count " + std::to_string(count) + " at q = " + to_string(q));
        if (!log.ok)
            return;
    }
}

// 5. named instances with exact witnesses
void criterion_named(check_log& log) {
    {
        const verdict v = analyze(rat(1));
        log.require(v.constructible && v.degree == 1 && v.root_t && *v.root_t == rat(1),
                    "q = 1 should give degree 1 with t = 1");
    }
    {
        const verdict v = analyze(rat(1, 2));
        log.require(v.constructible && v.degree == 2, "q = 1/2 should give degree 2");
        log.require(v.quadratic.has_value(), "q = 1/2 needs a quadratic witness");
        if (v.quadratic && v.root_box) {
            const qpoly f_half = eval_q(bisector_cubic(), rat(1, 2));
            const qpoly doubled = rat(2) * *v.quadratic; // 2t^2 + 2t - 2
            log.require(doubled == qpoly(std::vector<rat>{rat(-2), rat(2), rat(2)}),
                        "witness should be X^2 + X - 1 up to the factor 2");
            log.require(divrem(f_half, *v.quadratic).second.is_zero(),
                        "witness must divide the cubic exactly");
            const isolation t = refine(*v.root_box, eps12);
            log.require(t.width() <= eps12, "bracket width above 10^-12");
            log.require(v.quadratic->eval(t.lo).sign() * v.quadratic->eval(t.hi).sign() < 0,
                        "bracket does not straddle the golden root");
        }
    }
    for (long long n : {2, 3}) {
        const verdict v = analyze(rat(n));
        log.require(!v.constructible && v.degree == 3,
                    "q = " + std::to_string(n) + " should give degree 3");
        log.require(v.certificate && !v.certificate->found(),
                    "degree-3 witness must be a no-root certificate");
    }
    {
        const verdict v = analyze(rat(11, 28));
        log.require(v.constructible && v.degree == 1 && v.root_t && *v.root_t == rat(4, 7),
                    "q = 11/28 should give degree 1 with t = 4/7");
    }
}

// 6. reconstruction closes the loop; the 5-5-8 bisector agrees across routes
void criterion_reconstruction(check_log& log) {
    for (const rat& q : {rat(1), rat(1, 2), rat(2), rat(3)}) {
        const qpoly fq = eval_q(bisector_cubic(), q);
        const reconstruction rec = reconstruct(q, geometric_root(fq), eps12);
        log.require(rec.p_deviation() <= tol10,
                    "recomputed bisector off by more than 10^-10 at q = " + to_string(q));
        log.require(rec.b.width() <= eps12 && rec.l.width() <= eps12,
                    "side enclosures wider than eps at q = " + to_string(q));
    }
    const rat expected(5760, 169);
    log.require(p_sq_from_sides(rat(5), rat(8)) == expected, "closed form disagrees");
    log.require(p_sq_cosine_chain(rat(5), rat(8)) == expected, "cosine-law chain disagrees");
    log.require(p_sq_bisector_oracle(rat(5), rat(8)) == expected, "classical oracle disagrees");
}

// 7. every step of the symbolic derivation chain verifies
void criterion_derive(check_log& log) {
    const auto steps = derivation_chain();
    log.require(steps.size() == 6, "expected the 6-step chain");
    for (const auto& s : steps)
        log.require(s.verified, "step failed: " + s.name);
    std::ostringstream out, err;
    cli::config cfg;
    log.require(cli::cmd_derive(cfg, out, err) == cli::exit_ok,
                "derive must exit 0 when all steps verify");
}

struct criterion {
    int id;
    std::string name;
    std::function<void(check_log&)> body;
    double limit_seconds;
};

} // namespace

int main() {
    const std::vector<criterion> criteria{
        {1, "symbolic theorem reproduction with the full certificate chain", criterion_symbolic, 1.0},
        {2, "forward exact identity on 1000 seeded triangles", criterion_forward, 5.0},
        {3, "root <=> unit-bisector equivalence (500 random + 200 family)", criterion_equivalence, 5.0},
        {4, "unique geometric root for 200 seeded q in (0, 100]", criterion_unique_root, 5.0},
        {5, "named instances q = 1, 1/2, 2, 3, 11/28", criterion_named, 5.0},
        {6, "reconstruction closes the loop; 5-5-8 oracle agreement", criterion_reconstruction, 5.0},
        {7, "derivation chain fully verified", criterion_derive, 5.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        check_log log;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(log);
        } catch (const std::exception& e) {
            log.require(false, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        log.require(elapsed.count() < c.limit_seconds,
                    "runtime " + std::to_string(elapsed.count()) + "s exceeds limit");
        std::printf("[%s] criterion %d: %s (%.0f ms)\n", log.ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), elapsed.count() * 1000.0);
        if (!log.ok) {
            std::printf("       %s\n", log.detail.c_str());
            ++failures;
        }
    }
    std::printf("%d/%zu acceptance criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
