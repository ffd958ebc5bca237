#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bisect/cli.hpp"
#include "bisect/constructibility.hpp"
#include "bisect/report.hpp"

using namespace bisect;
using nlohmann::json;

namespace {

struct run_result {
    int code;
    std::string out;
    std::string err;
};

run_result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("analyze exit codes and reports") {
    {
        const auto r = run_cli({"analyze", "--q", "1"});
        CHECK(r.code == cli::exit_ok);
        CHECK(contains(r.out, "decision: Constructible"));
        CHECK(contains(r.out, "t = 1"));
    }
    {
        const auto r = run_cli({"analyze", "--q", "2"});
        CHECK(r.code == cli::exit_not_constructible);
        CHECK(contains(r.out, "decision: NotConstructible"));
    }
    {
        const auto r = run_cli({"analyze", "--q", "symbolic"});
        CHECK(r.code == cli::exit_not_constructible);
        CHECK(contains(r.out, "symbolic transcendental"));
        CHECK(contains(r.out, "primitivity"));
        CHECK(contains(r.out, "irreducible"));
    }
    CHECK(run_cli({"analyze", "--q", "0"}).code == cli::exit_usage);
    CHECK(run_cli({"analyze", "--q", "-3"}).code == cli::exit_usage);
    CHECK(run_cli({"analyze", "--q", "zzz"}).code == cli::exit_usage);
    CHECK(run_cli({"analyze"}).code == cli::exit_usage);
    CHECK(run_cli({"frobnicate"}).code == cli::exit_usage);
}

TEST_CASE("analyze JSON round-trips through the verdict schema") {
    for (const char* q : {"1", "1/2", "2", "11/28"}) {
        const auto r = run_cli({"analyze", "--q", q, "--format", "json"});
        const json j = json::parse(r.out);
        const verdict parsed = verdict_from_json(j);
        CHECK(parsed.degree == j.at("verdict").at("degree").get<int>());
        // serialize again: stable schema means identical JSON
        CHECK(to_json(parsed, 12) == j);
    }
    {
        const auto r = run_cli({"analyze", "--q", "symbolic", "--format", "json"});
        const json j = json::parse(r.out);
        const verdict parsed = verdict_from_json(j);
        CHECK(to_json(parsed, 12) == j);
        CHECK(same_content(parsed, analyze_symbolic()));
    }
}

TEST_CASE("solve reports the reconstructed triangle") {
    {
        const auto r = run_cli({"solve", "--q", "1"});
        CHECK(r.code == cli::exit_ok);
        CHECK(contains(r.out, "t = l/b = 1 (exact)"));
        CHECK(contains(r.out, "1.154700538379"));
        CHECK(contains(r.out, "exact p^2 at (q, t): 1"));
        CHECK(contains(r.out, "|p - 1| <= 10^-"));
    }
    {
        const auto r = run_cli({"solve", "--q", "1/2"});
        CHECK(r.code == cli::exit_ok);
        CHECK(contains(r.out, "0.618033988750"));
        const auto pos = r.out.find("|p - 1| <= 10^-");
        REQUIRE(pos != std::string::npos);
        const int exponent = std::atoi(r.out.c_str() + pos + 15);
        CHECK(exponent >= 10); // the certified bound is at worst 100*eps
    }
    {
        const auto r = run_cli({"solve", "--q", "2", "--format", "json"});
        CHECK(r.code == cli::exit_ok);
        const json j = json::parse(r.out).at("solve");
        CHECK(j.at("t").at("decimal").get<std::string>() == "2.214504037746");
        CHECK(j.at("degree").get<int>() == 3);
        const rat dev = parse_rat(j.at("p_deviation").get<std::string>());
        CHECK(dev <= rat(bigint(1), pow10(10)));
        // interval endpoints are exact rationals and genuinely certify eps
        for (const char* side : {"b", "l"}) {
            const rat lo = parse_rat(j.at(side).at("lo").get<std::string>());
            const rat hi = parse_rat(j.at(side).at("hi").get<std::string>());
            CHECK(lo <= hi);
            CHECK(hi - lo <= rat(bigint(1), pow10(12)));
        }
    }
    {
        const auto r = run_cli({"analyze", "--q", "2", "--digits", "4"});
        CHECK(r.code == cli::exit_not_constructible);
        CHECK(contains(r.out, "~ 2.2145"));
    }
    CHECK(run_cli({"solve", "--q", "symbolic"}).code == cli::exit_usage);
    CHECK(run_cli({"solve", "--q", "0"}).code == cli::exit_usage);
}

TEST_CASE("derive verifies the whole chain deterministically") {
    const auto first = run_cli({"derive"});
    CHECK(first.code == cli::exit_ok);
    CHECK(contains(first.out, "all steps verified"));
    const auto second = run_cli({"derive"});
    CHECK(first.out == second.out); // byte-for-byte

    const auto j = run_cli({"derive", "--format", "json"});
    CHECK(j.code == cli::exit_ok);
    const json steps = json::parse(j.out);
    REQUIRE(steps.size() == 6);
    for (const auto& s : steps) {
        CHECK(s.at("verified").get<bool>());
        CHECK(s.contains("step"));
        CHECK(s.contains("lhs"));
        CHECK(s.contains("rhs"));
    }
}

TEST_CASE("scan tabulates the family") {
    {
        const auto r = run_cli({"scan", "--s-min", "1/2", "--s-max", "1", "--s-step", "1/2"});
        CHECK(r.code == cli::exit_ok);
        CHECK(r.out == "s,q,t,degree\n1/2,11/28,4/7,1\n1,1,1,1\n");
    }
    {
        const auto r = run_cli(
            {"scan", "--s-min", "1/4", "--s-max", "5/4", "--s-step", "1/4", "--format", "json"});
        CHECK(r.code == cli::exit_ok);
        const json rows = json::parse(r.out);
        REQUIRE(rows.size() == 5);
        for (const auto& row : rows)
            CHECK(row.at("degree").get<int>() == 1);
    }
    CHECK(run_cli({"scan", "--s-min", "0", "--s-max", "1", "--s-step", "1/4"}).code ==
          cli::exit_usage);
    CHECK(run_cli({"scan", "--s-min", "1/2", "--s-max", "3/2", "--s-step", "1/4"}).code ==
          cli::exit_usage);
    CHECK(run_cli({"scan", "--s-min", "1/2", "--s-max", "1", "--s-step", "0"}).code ==
          cli::exit_usage);
}

TEST_CASE("selftest passes and is reproducible") {
    const auto r = run_cli({"selftest", "--seed", "42"});
    CHECK(r.code == cli::exit_ok);
    CHECK(contains(r.out, "forward-identity: 1000/1000 PASS"));
    CHECK(contains(r.out, "root-equivalence: 700/700 PASS"));
    CHECK(contains(r.out, "unique-geometric-root: 200/200 PASS"));
    CHECK(contains(r.out, "symbolic-certificate: 1/1 PASS"));
    const auto again = run_cli({"selftest", "--seed", "42"});
    CHECK(r.out == again.out);
}

TEST_CASE("environment default format and --out") {
    setenv("BISECTORC_FORMAT", "json", 1);
    const auto r = run_cli({"analyze", "--q", "1"});
    unsetenv("BISECTORC_FORMAT");
    CHECK(r.code == cli::exit_ok);
    CHECK(json::parse(r.out).at("verdict").at("degree").get<int>() == 1);

    // flag beats environment
    setenv("BISECTORC_FORMAT", "json", 1);
    const auto t = run_cli({"analyze", "--q", "1", "--format", "text"});
    unsetenv("BISECTORC_FORMAT");
    CHECK(contains(t.out, "decision: Constructible"));

    const std::string path = "/tmp/bisectorc_test_out.json";
    const auto o = run_cli({"analyze", "--q", "2", "--format", "json", "--out", path});
    CHECK(o.code == cli::exit_not_constructible);
    CHECK(o.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const json j = json::parse(in);
    CHECK(j.at("verdict").at("degree").get<int>() == 3);
    std::remove(path.c_str());
}
