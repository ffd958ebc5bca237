#include "bisect/report.hpp"

#include <sstream>

#include "bisect/bivariate.hpp"

namespace bisect {

namespace {

using nlohmann::json;

json isolation_to_json(const isolation& iv, int digits) {
    return json{{"lo", to_string(iv.lo)},
                {"hi", to_string(iv.hi)},
                {"exact", iv.exact},
                {"decimal", to_decimal((iv.lo + iv.hi) / rat(2), digits)}};
}

const char* decision_name(bool constructible) {
    return constructible ? "Constructible" : "NotConstructible";
}

std::string mode_name(search_mode m) {
    return m == search_mode::rational_q ? "rational_q" : "symbolic_q";
}

search_mode mode_from_name(const std::string& s) {
    if (s == "rational_q")
        return search_mode::rational_q;
    if (s == "symbolic_q")
        return search_mode::symbolic_q;
    throw parse_error("unknown certificate mode '" + s + "'", 0);
}

// A rendered qpoly is not meant to be reparsed; candidates therefore carry
// the coefficient list alongside the rendering.
json qpoly_to_json(const qpoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(to_string(c));
    return json{{"coeffs", coeffs}, {"rendered", render(p)}};
}

qpoly qpoly_from_json(const json& j) {
    std::vector<rat> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(parse_rat(c.get<std::string>()));
    return qpoly(std::move(coeffs));
}

json qpoly_in_q_to_json(const qpoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(to_string(c));
    return json{{"coeffs", coeffs}, {"rendered", render(p, "q")}};
}

} // namespace

json to_json(const root_search_certificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.narrative) {
        json step{{"tag", s.tag}, {"polynomials", s.polynomials}};
        step["residual"] = s.residual ? json(*s.residual) : json(nullptr);
        steps.push_back(std::move(step));
    }
    json candidates = json::array();
    for (const auto& c : cert.candidates)
        candidates.push_back(json{{"g", to_string(c.g)},
                                  {"h", to_string(c.h)},
                                  {"residual", qpoly_in_q_to_json(c.residual)}});
    json out{{"mode", mode_name(cert.mode)},
             {"conclusion", cert.found() ? "RootFound" : "NoRootFound"},
             {"steps", steps},
             {"candidates", candidates}};
    if (cert.root)
        out["root"] = to_string(*cert.root);
    return out;
}

root_search_certificate certificate_from_json(const json& j) {
    root_search_certificate cert;
    cert.mode = mode_from_name(j.at("mode").get<std::string>());
    for (const auto& s : j.at("steps")) {
        proof_step step;
        step.tag = s.at("tag").get<std::string>();
        for (const auto& p : s.at("polynomials"))
            step.polynomials.push_back(p.get<std::string>());
        if (s.contains("residual") && !s.at("residual").is_null())
            step.residual = s.at("residual").get<std::string>();
        cert.narrative.push_back(std::move(step));
    }
    for (const auto& c : j.at("candidates"))
        cert.candidates.push_back({parse_rat(c.at("g").get<std::string>()),
                                   parse_rat(c.at("h").get<std::string>()),
                                   qpoly_from_json(c.at("residual"))});
    if (j.contains("root"))
        cert.root = parse_rat(j.at("root").get<std::string>());
    return cert;
}

json to_json(const verdict& v, int digits) {
    json witness;
    if (v.root_t) {
        witness = json{{"kind", "rational_root"}, {"data", json{{"t", to_string(*v.root_t)}}}};
    } else if (v.quadratic) {
        witness = json{{"kind", "quadratic_factor"}, {"data", qpoly_to_json(*v.quadratic)}};
    } else {
        witness = json{{"kind", "irreducibility_certificate"}, {"data", to_json(*v.certificate)}};
    }
    json out{{"q_spec", v.kind == q_kind::rational ? to_string(*v.q) : "symbolic"},
             {"degree", v.degree},
             {"decision", decision_name(v.constructible)},
             {"witness", std::move(witness)}};
    if (v.root_box)
        out["root"] = isolation_to_json(*v.root_box, digits);
    return json{{"verdict", std::move(out)}};
}

verdict verdict_from_json(const json& j) {
    const json& jv = j.at("verdict");
    verdict v;
    const std::string qs = jv.at("q_spec").get<std::string>();
    if (qs == "symbolic") {
        v.kind = q_kind::symbolic_transcendental;
    } else {
        v.kind = q_kind::rational;
        v.q = parse_rat(qs);
    }
    v.degree = jv.at("degree").get<int>();
    v.constructible = jv.at("decision").get<std::string>() == "Constructible";
    const json& w = jv.at("witness");
    const std::string kind = w.at("kind").get<std::string>();
    if (kind == "rational_root")
        v.root_t = parse_rat(w.at("data").at("t").get<std::string>());
    else if (kind == "quadratic_factor")
        v.quadratic = qpoly_from_json(w.at("data"));
    else
        v.certificate = certificate_from_json(w.at("data"));
    if (jv.contains("root")) {
        const json& r = jv.at("root");
        isolation iv;
        iv.lo = parse_rat(r.at("lo").get<std::string>());
        iv.hi = parse_rat(r.at("hi").get<std::string>());
        iv.exact = r.at("exact").get<bool>();
        v.root_box = std::move(iv);
    }
    return v;
}

namespace {

bool same_certificate(const root_search_certificate& a, const root_search_certificate& b) {
    if (a.mode != b.mode || a.root != b.root || a.candidates.size() != b.candidates.size() ||
        a.narrative.size() != b.narrative.size())
        return false;
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
        const auto& x = a.candidates[i];
        const auto& y = b.candidates[i];
        if (!(x.g == y.g && x.h == y.h && x.residual == y.residual))
            return false;
    }
    for (std::size_t i = 0; i < a.narrative.size(); ++i) {
        const auto& x = a.narrative[i];
        const auto& y = b.narrative[i];
        if (x.tag != y.tag || x.polynomials != y.polynomials || x.residual != y.residual)
            return false;
    }
    return true;
}

} // namespace

bool same_content(const verdict& a, const verdict& b) {
    if (a.kind != b.kind || a.q != b.q || a.degree != b.degree ||
        a.constructible != b.constructible || a.root_t != b.root_t ||
        a.quadratic != b.quadratic)
        return false;
    if (a.certificate.has_value() != b.certificate.has_value())
        return false;
    if (a.certificate && !same_certificate(*a.certificate, *b.certificate))
        return false;
    if (a.root_box.has_value() != b.root_box.has_value())
        return false;
    if (a.root_box) {
        if (!(a.root_box->lo == b.root_box->lo && a.root_box->hi == b.root_box->hi &&
              a.root_box->exact == b.root_box->exact))
            return false;
    }
    return true;
}

namespace {

std::string poly_at(const proof_step& s, std::size_t i) {
    return i < s.polynomials.size() ? s.polynomials[i] : std::string("?");
}

std::string narrative_line(const proof_step& s) {
    if (s.tag == "primitivity")
        return "primitivity: content_X = " + poly_at(s, 0) +
               ", a unit, so the cubic is primitive in Q[q][X] and Gauss' theorem reduces "
               "irreducibility over Q(q) to Q[q][X]";
    if (s.tag == "divisor_constraint_g")
        return "divisor constraint on g: a root g/h in lowest terms needs g | " + poly_at(s, 0) +
               " in Q[q]; the constant coefficient is a unit, so g is a unit";
    if (s.tag == "divisor_constraint_h")
        return "divisor constraint on h: h | " + poly_at(s, 0) +
               " in Q[q]; the leading coefficient is a unit, so h is a unit";
    if (s.tag == "degree_argument")
        return "degree argument: a root 1/h satisfies " + poly_at(s, 0) + " = " + poly_at(s, 1) +
               "; comparing degrees in q forces deg h = 0, so h is a rational constant c";
    if (s.tag == "constant_case_contradiction")
        return "constant case: every q-power coefficient of f(c) must vanish, so " + poly_at(s, 0) +
               " = 0 fixes the candidates; each leaves the nonzero residual " +
               (s.residual ? *s.residual : std::string("(none)")) + " -- no root exists";
    if (s.tag == "constant_root_found")
        return "constant case: candidate forced by " + poly_at(s, 0) +
               " = 0 satisfies f(c) = 0 exactly";
    if (s.tag == "clear_denominators")
        return "primitive integer model: " + poly_at(s, 0);
    if (s.tag == "divisor_candidates")
        return "candidates are +-(divisors of " + poly_at(s, 0) + ")/(divisors of " +
               poly_at(s, 1) + ")";
    return s.tag;
}

} // namespace

std::vector<std::string> narrative_lines(const root_search_certificate& cert) {
    std::vector<std::string> lines;
    int n = 1;
    for (const auto& s : cert.narrative)
        lines.push_back(std::to_string(n++) + ". " + narrative_line(s));
    if (cert.root)
        lines.push_back("conclusion: root " + to_string(*cert.root) + " found -- reducible");
    else
        lines.push_back("conclusion: no root in the fraction field -- irreducible");
    return lines;
}

std::string to_text(const verdict& v, int digits) {
    std::ostringstream out;
    if (v.kind == q_kind::rational) {
        out << "q = " << to_string(*v.q) << " (rational)\n";
        out << "cubic: " << render(eval_q(bisector_cubic(), *v.q)) << "\n";
    } else {
        out << "q = symbolic transcendental\n";
        out << "cubic: " << render(bisector_cubic()) << " over Q[q]\n";
    }
    out << "degree of t = l/b over the base field: " << v.degree << "\n";
    out << "decision: " << decision_name(v.constructible);
    out << (v.constructible ? " (degree is a power of 2)\n" : " (3 is not a power of 2)\n");
    if (v.root_t)
        out << "witness: rational root t = " << to_string(*v.root_t) << "\n";
    if (v.quadratic)
        out << "witness: quadratic factor " << render(*v.quadratic)
            << " bracketing the geometric root\n";
    if (v.root_box) {
        const isolation& iv = *v.root_box;
        if (iv.exact)
            out << "root box: t = " << to_string(iv.value()) << " (exact) ~ "
                << to_decimal(iv.value(), digits) << "\n";
        else
            out << "root box: t in [" << to_string(iv.lo) << ", " << to_string(iv.hi) << "] ~ "
                << to_decimal((iv.lo + iv.hi) / rat(2), digits) << "\n";
    }
    if (v.certificate) {
        out << "certificate:\n";
        for (const auto& line : narrative_lines(*v.certificate))
            out << "  " << line << "\n";
    }
    return out.str();
}

} // namespace bisect
