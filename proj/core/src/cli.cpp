#include "apolar/cli.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apolar/binary_apolar.hpp"
#include "apolar/parse.hpp"
#include "apolar/serialize.hpp"
#include "apolar/version.hpp"

namespace apolar {

namespace {
using nlohmann::json;

std::string payload(const JobRequest& req) {
    if (!req.expr.empty()) return req.expr;
    if (req.input_path.empty())
        throw parse_error("no input: pass an expression or an input file");
    std::ifstream in(req.input_path);
    if (!in) throw parse_error("cannot read input file: " + req.input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rational> split_rationals(const std::string& text, char sep) {
    std::vector<Rational> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, sep)) {
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) throw parse_error("empty coordinate");
        out.push_back(parse_rational(token.substr(a, b - a + 1)));
    }
    if (out.empty()) throw parse_error("empty coordinate list");
    return out;
}

Multidegree parse_B(const std::string& text) {
    std::vector<int> deg;
    for (const Rational& q : split_rationals(text, ',')) {
        if (denominator(q) != 1) throw parse_error("B must be a list of integers");
        deg.push_back(static_cast<int>(numerator(q)));
    }
    return Multidegree{deg};
}

// Default operator degree: half the declared degree of f.
Multidegree half_degree(const GradedForm& f) {
    if (!f.degree()) throw degree_error("f has no declared multidegree");
    std::vector<int> half;
    for (int a : f.degree()->deg) {
        if (a % 2 != 0)
            throw degree_error(
                "declared degree is odd in some factor; pass B explicitly");
        half.push_back(a / 2);
    }
    return Multidegree{half};
}

Multidegree choose_B(const JobRequest& req, const GradedForm& f) {
    return req.B_text.empty() ? half_degree(f) : parse_B(req.B_text);
}

// Point text "s1,s2;t1,t2" -> flat coordinate vector, blocks in order.
std::vector<Rational> parse_point(const std::string& text) {
    if (text.empty()) throw parse_error("no point given");
    std::vector<Rational> out;
    std::string block;
    std::istringstream ss(text);
    while (std::getline(ss, block, ';'))
        for (const Rational& q : split_rationals(block, ',')) out.push_back(q);
    return out;
}

GradedForm parse_input_form(const JobRequest& req,
                            const char* default_mode = "auto") {
    std::string mode = req.mode.empty() ? default_mode : req.mode;
    if (mode == "auto" && std::string(default_mode) != "auto")
        mode = default_mode;
    return parse_form(payload(req), form_mode_from_string(mode));
}

BinaryForm as_binary(const GradedForm& f) {
    if (f.ring().block_count() != 1 || f.ring().size(0) != 2)
        throw shape_error("expected a binary form");
    if (!f.degree()) throw degree_error("f has no declared degree");
    int d = f.degree()->deg[0];
    BinaryForm out(d);
    for (const auto& [e, c] : f.terms()) out.coeff(e[1]) += c;
    return out;
}

std::string wrap(json j, int indent) {
    j["tool"] = "apolar";
    j["version"] = APOLAR_VERSION;
    return j.dump(indent) + "\n";
}

std::string dispatch(const JobRequest& req) {
    const std::string& cmd = req.subcommand;

    if (cmd == "catalecticant") {
        GradedForm f = parse_input_form(req);
        return json_of_catalecticant(catalecticant(f, choose_B(req, f)));
    }
    if (cmd == "antipolar") {
        GradedForm f = parse_input_form(req);
        return json_of_antipolar(antipolar(f, choose_B(req, f)));
    }
    if (cmd == "rs-membership") {
        GradedForm f = parse_input_form(req);
        Multidegree B = choose_B(req, f);
        std::vector<Rational> pt = parse_point(req.point_text);
        AntipolarForm omega = antipolar(f, B);
        Rational value = antipolar_eval(omega, pt);
        json j;
        j["member"] = (value == 0);
        j["status"] = to_string(value == 0 ? ForbiddenStatus::FORBIDDEN_CANDIDATE
                                           : ForbiddenStatus::NOT_DECIDED);
        j["omega_value"] = to_string(value);
        json p = json::array();
        for (const auto& q : pt) p.push_back(to_string(q));
        j["point"] = p;
        return wrap(j, 2);
    }
    if (cmd == "forbidden-scan") {
        GradedForm f = parse_input_form(req, "ternary");
        return json_of_quartic_scan(forbidden_scan_quartic(f));
    }
    if (cmd == "signature") {
        Matrix<Rational> m = matrix_from_json(payload(req));
        return json_of_signature(signature(m));
    }
    if (cmd == "rank-certify") {
        GradedForm f = parse_input_form(req, "bigraded");
        return json_of_certificate(rank_certify(f));
    }
    if (cmd == "boundary-side") {
        GradedForm f = parse_input_form(req, "bigraded");
        AntipolarForm omega = antipolar(f, choose_B(req, f));
        return json_of_boundary(omega_real_zero_exists(omega));
    }
    if (cmd == "sample-typical") {
        SampleStats st =
            typical_rank_sample(req.d, req.samples, req.seed, req.workers);
        return json_of_sample_stats(st);
    }
    if (cmd == "pencil-form") {
        Pencil p = pencil_from_json(payload(req));
        return json_of_binary_form(pencil_form(p));
    }
    if (cmd == "hyperdet") {
        Pencil p = pencil_from_json(payload(req));
        return json_of_hyperdet(hyperdet_2nn(p));
    }
    if (cmd == "bergqvist") {
        Pencil p = pencil_from_json(payload(req));
        BergqvistVerdict v = bergqvist_real_rank(p);
        json j;
        j["verdict"] = to_string(v);
        j["n"] = p.n;
        return wrap(j, 2);
    }
    if (cmd == "hyperdet2222") {
        Tensor2222 z = tensor2222_from_json(payload(req));
        return json_of_hyperdet2222(hyperdet_2222(z));
    }
    if (cmd == "binary-rank") {
        GradedForm g = parse_input_form(req, "binary");
        BinaryForm f = as_binary(g);
        auto [g1, g2] = binary_apolar_generators(f);
        int rank = binary_rank_complex(f);
        auto jbin = [](const BinaryForm& b) {
            json jb;
            jb["degree"] = b.formal_degree();
            json c = json::array();
            for (const auto& x : b.coeffs()) c.push_back(to_string(x));
            jb["coefficients"] = c;
            return jb;
        };
        json j;
        j["degree"] = f.formal_degree();
        j["rank"] = rank;
        j["g1"] = jbin(g1);
        j["g2"] = jbin(g2);
        j["is_power"] = (g1.formal_degree() == 1);
        j["tangential"] = (f.formal_degree() >= 2)
                              ? json(tangential_membership_binary(f))
                              : json(nullptr);
        if (!req.point_text.empty()) {
            std::vector<Rational> pt = parse_point(req.point_text);
            if (pt.size() != 2) throw dimension_error("binary point needs 2 coordinates");
            j["rs_witness"] = rs_witness_binary(f, pt[0], pt[1]);
        }
        return wrap(j, 2);
    }
    throw parse_error("unknown subcommand: " + cmd);
}
}  // namespace

RunResult run(const JobRequest& req) {
    try {
        if (req.format != "json")
            throw parse_error("unsupported output format: " + req.format);
        return {0, dispatch(req)};
    } catch (const schema_error& e) {
        return {1, json_of_error("schema_error", e.what())};
    } catch (const parse_error& e) {
        return {1, json_of_error("parse_error", e.what(), e.offset)};
    } catch (const precondition_error& e) {
        return {2, json_of_error(e.kind, e.what())};
    } catch (const std::exception& e) {
        return {3, json_of_error("internal_error", e.what())};
    }
}

}  // namespace apolar
