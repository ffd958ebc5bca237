#include "bisect/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisect/bivariate.hpp"
#include "bisect/constructibility.hpp"
#include "bisect/derivation.hpp"
#include "bisect/geometry.hpp"
#include "bisect/report.hpp"
#include "bisect/sampling.hpp"

namespace bisect::cli {

namespace {

using nlohmann::json;

rat pow10_inv(int digits) {
    return rat(bigint(1), pow10(digits));
}

// RFC-4180 style: quote when the value holds a comma, quote, or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::optional<rat> parse_q(const std::string& text, std::ostream& err) {
    try {
        rat q = parse_rat(text);
        if (q.sign() <= 0) {
            err << "error: q must be positive, got " << text << "\n";
            return std::nullopt;
        }
        return q;
    } catch (const error& e) {
        err << "error: invalid q '" << text << "': " << e.what() << "\n";
        return std::nullopt;
    }
}

} // namespace

int cmd_analyze(const config& cfg, std::ostream& out, std::ostream& err) {
    verdict v;
    if (cfg.q_input == "symbolic") {
        v = analyze_symbolic();
    } else {
        const auto q = parse_q(cfg.q_input, err);
        if (!q)
            return exit_usage;
        v = analyze(*q);
        if (v.root_box && !v.root_box->exact)
            v.root_box = refine(*v.root_box, pow10_inv(cfg.digits + 2));
    }
    if (cfg.format == output_format::json)
        out << to_json(v, cfg.digits).dump(2) << "\n";
    else
        out << to_text(v, cfg.digits);
    return v.constructible ? exit_ok : exit_not_constructible;
}

int cmd_solve(const config& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.q_input == "symbolic") {
        err << "error: solve needs a rational q (symbolic has no lengths to reconstruct)\n";
        return exit_usage;
    }
    const auto q = parse_q(cfg.q_input, err);
    if (!q)
        return exit_usage;

    const verdict v = analyze(*q);
    isolation t = refine(*v.root_box, cfg.eps);
    const reconstruction rec = reconstruct(*q, t, cfg.eps);

    std::optional<rat> exact_p_sq;
    if (t.exact)
        exact_p_sq = p_sq_from_q_t(*q, t.value());

    if (cfg.format == output_format::json) {
        json jt{{"lo", to_string(rec.t.lo)},
                {"hi", to_string(rec.t.hi)},
                {"exact", t.exact},
                {"decimal", to_decimal(rec.t.mid(), cfg.digits)}};
        json j{{"solve",
                json{{"q", to_string(*q)},
                     {"degree", v.degree},
                     {"decision", v.constructible ? "Constructible" : "NotConstructible"},
                     {"t", std::move(jt)},
                     {"b", json{{"lo", to_string(rec.b.lo)},
                                {"hi", to_string(rec.b.hi)},
                                {"decimal", to_decimal(rec.b.mid(), cfg.digits)}}},
                     {"l", json{{"lo", to_string(rec.l.lo)},
                                {"hi", to_string(rec.l.hi)},
                                {"decimal", to_decimal(rec.l.mid(), cfg.digits)}}},
                     {"p_deviation", to_string(rec.p_deviation())}}}};
        if (exact_p_sq)
            j["solve"]["p_sq_exact"] = to_string(*exact_p_sq);
        out << j.dump(2) << "\n";
    } else {
        out << "q = " << to_string(*q) << "\n";
        if (t.exact)
            out << "t = l/b = " << to_string(t.value()) << " (exact) ~ "
                << to_decimal(t.value(), cfg.digits) << "\n";
        else
            out << "t = l/b ~ " << to_decimal(rec.t.mid(), cfg.digits) << "  (bracket width <= "
                << to_string(cfg.eps) << ")\n";
        if (exact_p_sq)
            out << "exact p^2 at (q, t): " << to_string(*exact_p_sq) << "\n";
        out << "b ~ " << to_decimal(rec.b.mid(), cfg.digits) << "\n";
        out << "l ~ " << to_decimal(rec.l.mid(), cfg.digits) << "\n";
        const rat dev = rec.p_deviation();
        if (dev.is_zero()) {
            out << "p = 1 (exact)\n";
        } else {
            int k = 0;
            while (k < 60 && dev <= rat(bigint(1), pow10(k + 1)))
                ++k;
            out << "|p - 1| <= 10^-" << k << " (certified from the reconstructed sides)\n";
        }
    }
    return exit_ok;
}

int cmd_derive(const config& cfg, std::ostream& out, std::ostream&) {
    const std::vector<derivation_step> steps = derivation_chain();
    bool all_ok = true;
    if (cfg.format == output_format::json) {
        json arr = json::array();
        for (const auto& s : steps) {
            arr.push_back(json{{"step", s.name}, {"lhs", s.lhs}, {"rhs", s.rhs},
                               {"verified", s.verified}});
            all_ok = all_ok && s.verified;
        }
        out << arr.dump(2) << "\n";
    } else {
        int n = 1;
        for (const auto& s : steps) {
            out << n++ << ". " << s.name << ": " << s.lhs << "  ==  " << s.rhs << "  ["
                << (s.verified ? "PASS" : "FAIL") << "]\n";
            all_ok = all_ok && s.verified;
        }
        out << (all_ok ? "all steps verified\n" : "derivation check FAILED\n");
    }
    return all_ok ? exit_ok : exit_internal_failure;
}

int cmd_scan(const config& cfg, std::ostream& out, std::ostream& err) {
    const rat two(2);
    if (cfg.s_min.sign() <= 0 || cfg.s_step.sign() <= 0 || cfg.s_max < cfg.s_min ||
        !(cfg.s_max * cfg.s_max < two)) {
        err << "error: scan needs 0 < s-min <= s-max with s-max^2 < 2 and a positive s-step\n";
        return exit_usage;
    }

    struct row {
        rat s, q, t;
        int degree;
    };
    std::vector<row> rows;
    for (rat s = cfg.s_min; s <= cfg.s_max; s += cfg.s_step) {
        const family_point fp = constructible_family(s);
        const verdict v = analyze(fp.q);
        rows.push_back({s, fp.q, fp.t, v.degree});
    }

    bool all_degree_one = true;
    if (cfg.format == output_format::json) {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back(json{{"s", to_string(r.s)},
                               {"q", to_string(r.q)},
                               {"t", to_string(r.t)},
                               {"degree", r.degree}});
            all_degree_one = all_degree_one && r.degree == 1;
        }
        out << arr.dump(2) << "\n";
    } else {
        out << "s,q,t,degree\n";
        for (const auto& r : rows) {
            out << csv_field(to_string(r.s)) << "," << csv_field(to_string(r.q)) << ","
                << csv_field(to_string(r.t)) << "," << r.degree << "\n";
            all_degree_one = all_degree_one && r.degree == 1;
        }
    }
    return all_degree_one ? exit_ok : exit_internal_failure;
}

namespace {

struct suite_result {
    std::string name;
    int passed = 0;
    int total = 0;
    std::string failure; // serialized witness of the first failure
    bool ok() const { return passed == total; }
};

suite_result forward_identity_suite(sampler& rng, int count) {
    suite_result res{"forward-identity", 0, count, ""};
    for (int i = 0; i < count; ++i) {
        const rat b = rng.positive_rational(60, 30);
        const rat t = rng.t_above_half();
        const rat l = t * b;
        const rat residual =
            cubic_residual(l, b, p_sq_from_sides(l, b), q_sq_from_sides(l, b));
        if (residual.is_zero()) {
            ++res.passed;
        } else if (res.failure.empty()) {
            res.failure = "l = " + to_string(l) + ", b = " + to_string(b) +
                          ", residual = " + to_string(residual);
        }
    }
    return res;
}

suite_result root_equivalence_suite(sampler& rng, int random_count, int family_count) {
    suite_result res{"root-equivalence", 0, random_count + family_count, ""};
    const bipoly f = bisector_cubic();
    for (int i = 0; i < random_count; ++i) {
        const rat q = rng.positive_rational(50, 25);
        const rat t = rng.t_above_half();
        const bool unit_p = p_sq_from_q_t(q, t) == rat(1);
        const bool root = eval_q(f, q).eval(t).is_zero();
        if (unit_p == root) {
            ++res.passed;
        } else if (res.failure.empty()) {
            res.failure = "q = " + to_string(q) + ", t = " + to_string(t);
        }
    }
    for (int i = 0; i < family_count; ++i) {
        const family_point fp = constructible_family(rng.family_s());
        const bool unit_p = p_sq_from_q_t(fp.q, fp.t) == rat(1);
        const bool root = eval_q(f, fp.q).eval(fp.t).is_zero();
        if (unit_p && root) {
            ++res.passed;
        } else if (res.failure.empty()) {
            res.failure = "family q = " + to_string(fp.q) + ", t = " + to_string(fp.t);
        }
    }
    return res;
}

suite_result unique_root_suite(sampler& rng, int count) {
    suite_result res{"unique-geometric-root", 0, count, ""};
    const bipoly f = bisector_cubic();
    const rat half(1, 2);
    for (int i = 0; i < count; ++i) {
        const rat q = rng.q_in_0_100();
        const qpoly fq = eval_q(f, q);
        const int roots_above = sturm_count(sturm_chain(square_free_part(fq)), half, std::nullopt);
        if (roots_above == 1) {
            ++res.passed;
        } else if (res.failure.empty()) {
            res.failure = "q = " + to_string(q) + ", count = " + std::to_string(roots_above);
        }
    }
    return res;
}

suite_result symbolic_suite() {
    suite_result res{"symbolic-certificate", 0, 1, ""};
    const verdict v = analyze_symbolic();
    const std::vector<std::string> expected{"primitivity", "divisor_constraint_g",
                                            "divisor_constraint_h", "degree_argument",
                                            "constant_case_contradiction"};
    bool ok = !v.constructible && v.degree == 3 && v.certificate &&
              v.certificate->narrative.size() == expected.size() && !v.certificate->found();
    if (ok)
        for (std::size_t i = 0; i < expected.size(); ++i)
            ok = ok && v.certificate->narrative[i].tag == expected[i];
    if (ok)
        for (const auto& c : v.certificate->candidates)
            ok = ok && !c.residual.is_zero();
    if (ok)
        ++res.passed;
    else
        res.failure = "symbolic certificate narrative malformed";
    return res;
}

} // namespace

int cmd_selftest(const config& cfg, std::ostream& out, std::ostream&) {
    sampler rng(cfg.seed);
    std::vector<suite_result> suites;
    suites.push_back(forward_identity_suite(rng, 1000));
    suites.push_back(root_equivalence_suite(rng, 500, 200));
    suites.push_back(unique_root_suite(rng, 200));
    suites.push_back(symbolic_suite());

    bool all_ok = true;
    for (const auto& s : suites) {
        out << s.name << ": " << s.passed << "/" << s.total << (s.ok() ? " PASS" : " FAIL")
            << "\n";
        if (!s.ok()) {
            out << "  failing instance: " << s.failure << "\n";
            all_ok = false;
        }
    }
    out << "selftest (seed " << cfg.seed << "): " << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? exit_ok : exit_internal_failure;
}

namespace {

std::optional<output_format> format_from_name(const std::string& name) {
    if (name == "text")
        return output_format::text;
    if (name == "json")
        return output_format::json;
    if (name == "csv")
        return output_format::csv;
    return std::nullopt;
}

// scan emits a CSV table; "text" maps onto it
output_format effective_scan_format(output_format f) {
    return f == output_format::json ? output_format::json : output_format::csv;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact constructibility analysis for isosceles-triangle bisector data"};
    app.name("bisectorc");
    app.require_subcommand(1);

    std::string format_name;
    std::string out_path;
    std::string q_text;
    std::string eps_text;
    std::string s_min_text, s_max_text, s_step_text;
    config cfg;

    auto add_common = [&](CLI::App* sub, bool with_q) {
        sub->add_option("--format", format_name, "output format: text | json | csv (scan only)");
        sub->add_option("--out", out_path, "write the report to this file instead of stdout");
        sub->add_option("--digits", cfg.digits, "fractional digits for decimal display")
            ->check(CLI::PositiveNumber);
        if (with_q)
            sub->add_option("--q", q_text, "apex bisector length (integer, a/b, or exact decimal)")
                ->required();
    };

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "decide constructibility for rational or symbolic q");
    add_common(analyze_cmd, true);

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "isolate t = l/b and reconstruct the triangle");
    add_common(solve_cmd, true);
    solve_cmd->add_option("--eps", eps_text, "certified bracket width (exact rational)");

    CLI::App* derive_cmd =
        app.add_subcommand("derive", "verify the symbolic chain from the triangle to the cubic");
    add_common(derive_cmd, false);

    CLI::App* scan_cmd =
        app.add_subcommand("scan", "tabulate the rational-root family over an s-range");
    add_common(scan_cmd, false);
    scan_cmd->add_option("--s-min", s_min_text, "range start (rational, > 0)")->required();
    scan_cmd->add_option("--s-max", s_max_text, "range end (rational, s-max^2 < 2)")->required();
    scan_cmd->add_option("--s-step", s_step_text, "step (rational, > 0)")->required();

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the seeded randomized verification suites");
    add_common(selftest_cmd, false);
    selftest_cmd->add_option("--seed", cfg.seed, "seed for the randomized suites");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    // flag beats environment beats built-in default
    if (!format_name.empty()) {
        const auto f = format_from_name(format_name);
        if (!f) {
            err << "usage error: unknown format '" << format_name << "'\n";
            return exit_usage;
        }
        cfg.format = *f;
    } else if (const char* env = std::getenv("BISECTORC_FORMAT")) {
        const auto f = format_from_name(env);
        if (f)
            cfg.format = *f;
        else
            err << "warning: ignoring BISECTORC_FORMAT='" << env << "'\n";
    }

    cfg.q_input = q_text;
    try {
        if (!eps_text.empty()) {
            cfg.eps = parse_rat(eps_text);
            if (cfg.eps.sign() <= 0) {
                err << "usage error: eps must be positive\n";
                return exit_usage;
            }
        }
        if (scan_cmd->parsed()) {
            cfg.s_min = parse_rat(s_min_text);
            cfg.s_max = parse_rat(s_max_text);
            cfg.s_step = parse_rat(s_step_text);
        }
    } catch (const error& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return exit_usage;
        }
        sink = &file;
    }

    try {
        if (analyze_cmd->parsed())
            return cmd_analyze(cfg, *sink, err);
        if (solve_cmd->parsed())
            return cmd_solve(cfg, *sink, err);
        if (derive_cmd->parsed())
            return cmd_derive(cfg, *sink, err);
        if (scan_cmd->parsed()) {
            cfg.format = effective_scan_format(cfg.format);
            return cmd_scan(cfg, *sink, err);
        }
        if (selftest_cmd->parsed())
            return cmd_selftest(cfg, *sink, err);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal_failure;
    }
    err << "usage error: no command\n";
    return exit_usage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

} // namespace bisect::cli
