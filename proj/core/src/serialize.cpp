#include "apolar/serialize.hpp"

#include <json.hpp>

#include "apolar/parse.hpp"
#include "apolar/version.hpp"

namespace apolar {

using nlohmann::json;

namespace {
json jrat(const Rational& q) { return to_string(q); }

json jring(const VariableBlock& ring) {
    json j;
    j["blocks"] = ring.sizes();
    j["names"] = ring.names();
    return j;
}

std::string monomial_text(const VariableBlock& ring, const Exponents& e) {
    std::string s;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(v);
        if (e[v] != 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

json jform(const GradedForm& f) {
    json j;
    j["ring"] = jring(f.ring());
    if (f.degree())
        j["degree"] = f.degree()->deg;
    else
        j["degree"] = nullptr;
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["exponents"] = e;
        t["coefficient"] = jrat(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    j["text"] = f.to_string();
    return j;
}

json jmatrix(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(jrat(m.at(i, j)));
        rows.push_back(r);
    }
    return rows;
}

json jsignature(const SignatureReport& sig) {
    json j;
    j["n_plus"] = sig.n_plus;
    j["n_minus"] = sig.n_minus;
    j["n_zero"] = sig.n_zero;
    return j;
}

json jbinary(const BinaryForm& f) {
    json j;
    j["degree"] = f.formal_degree();
    json c = json::array();
    for (const auto& x : f.coeffs()) c.push_back(jrat(x));
    j["coefficients"] = c;  // index i: coefficient of x^{d-i} y^i
    return j;
}

json jboundary(const BoundarySideReport& rep) {
    json j;
    j["side"] = to_string(rep.side);
    j["D"] = jbinary(rep.D);
    j["distinct_real_roots_of_D"] = rep.distinct_real_roots_of_D;
    if (rep.negative_point) {
        j["negative_point"] = {jrat(rep.negative_point->first),
                               jrat(rep.negative_point->second)};
        j["negative_value"] = jrat(*rep.negative_value);
    } else {
        j["negative_point"] = nullptr;
        j["negative_value"] = nullptr;
    }
    return j;
}

std::string dump(json& j, int indent) {
    j["tool"] = "apolar";
    j["version"] = APOLAR_VERSION;
    return j.dump(indent) + "\n";
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw schema_error("malformed JSON input");
    return j;
}

Rational jget_rational(const json& v, const char* what) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long long>());
    } catch (const parse_error&) {
    }
    throw schema_error(std::string("expected a rational (string or integer) for ") + what);
}

Matrix<Rational> jget_matrix(const json& rows, const char* what) {
    if (!rows.is_array() || rows.empty())
        throw schema_error(std::string(what) + " must be a nonempty array of rows");
    std::size_t r = rows.size();
    if (!rows[0].is_array() || rows[0].empty())
        throw schema_error(std::string(what) + " rows must be nonempty arrays");
    std::size_t c = rows[0].size();
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw schema_error(std::string(what) + " rows have inconsistent lengths");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = jget_rational(rows[i][j], what);
    }
    return m;
}
}  // namespace

std::string json_of_form(const GradedForm& f, int indent) {
    json j = jform(f);
    return dump(j, indent);
}

std::string json_of_catalecticant(const CatalecticantMatrix& cm, int indent) {
    json j;
    j["B"] = cm.B.deg;
    j["rows"] = cm.matrix.rows();
    j["cols"] = cm.matrix.cols();
    json rb = json::array(), cb = json::array();
    for (const auto& e : cm.row_basis.monomials)
        rb.push_back(monomial_text(cm.row_basis.ring, e));
    for (const auto& e : cm.col_basis.monomials)
        cb.push_back(monomial_text(cm.col_basis.ring, e));
    j["row_basis"] = rb;
    j["col_basis"] = cb;
    j["entries"] = jmatrix(cm.matrix);
    j["rank"] = cm.rank();
    if (cm.matrix.is_square()) j["det"] = jrat(det_exact(cm.matrix));
    return dump(j, indent);
}

std::string json_of_antipolar(const AntipolarForm& af, int indent) {
    json j;
    j["B"] = af.B.deg;
    j["det_phi"] = jrat(af.det_phi);
    j["point_ring"] = jring(af.point_ring);
    json terms = json::array();
    for (const auto& [e, c] : af.form.terms()) {
        json t;
        t["exponents"] = e;
        t["coefficient"] = jrat(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    j["text"] = af.form.to_string();
    return dump(j, indent);
}

std::string json_of_signature(const SignatureReport& sig, int indent) {
    json j = jsignature(sig);
    j["signature"] = sig.to_string();
    return dump(j, indent);
}

std::string json_of_quartic_scan(const QuarticScanReport& rep, int indent) {
    json j;
    j["rank"] = rep.rank_Cf;
    j["det"] = jrat(rep.det_Cf);
    j["delta"] = jform(rep.delta_poly);
    json conds = json::array();
    for (const auto& c : rep.nullspace_conditions) conds.push_back(jform(c));
    j["nullspace_conditions"] = conds;
    j["annotations"] = rep.annotations;
    return dump(j, indent);
}

std::string json_of_boundary(const BoundarySideReport& rep, int indent) {
    json j = jboundary(rep);
    return dump(j, indent);
}

std::string json_of_certificate(const RankCertificate& cert, int indent) {
    json j;
    j["verdict"] = to_string(cert.verdict);
    j["rank"] = cert.rank;
    j["summary"] = cert.summary();
    j["signature"] = jsignature(cert.phi_signature);
    j["det_phi"] = jrat(cert.det_phi);
    j["side"] = cert.side ? jboundary(*cert.side) : json(nullptr);
    if (cert.witness_point) {
        json w = json::array();
        for (const auto& x : *cert.witness_point) w.push_back(jrat(x));
        j["witness_point"] = w;
        j["witness_signature"] = jsignature(*cert.witness_signature);
    } else {
        j["witness_point"] = nullptr;
        j["witness_signature"] = nullptr;
    }
    j["assumptions"] = cert.assumptions;
    return dump(j, indent);
}

std::string json_of_sample_stats(const SampleStats& st, int indent) {
    json j;
    j["d"] = st.d;
    j["seed"] = st.seed;
    j["n_samples"] = st.n_samples;
    j["signature_counts"] = st.signature_counts;
    j["verdict_counts"] = st.verdict_counts;
    j["boundary_counts"] = st.boundary_counts;
    return dump(j, indent);
}

std::string json_of_pencil(const Pencil& p, int indent) {
    json j;
    j["n"] = p.n;
    j["T1"] = jmatrix(p.T1);
    j["T2"] = jmatrix(p.T2);
    j["symmetric"] = p.symmetric;
    return dump(j, indent);
}

std::string json_of_binary_form(const BinaryForm& f, int indent) {
    json j = jbinary(f);
    return dump(j, indent);
}

std::string json_of_hyperdet(const Hyperdet2nn& h, int indent) {
    json j;
    j["value"] = jrat(h.value);
    j["degenerate"] = h.degenerate;
    return dump(j, indent);
}

std::string json_of_hyperdet2222(const Hyperdet2222& h, int indent) {
    json j;
    json pc = json::array();
    for (int i = 0; i <= (h.p.is_zero() ? 0 : h.p.degree()); ++i)
        pc.push_back(jrat(h.p.coeff(i)));
    j["p_coefficients_ascending"] = pc;
    j["p_text"] = h.p.to_string("w");
    j["value"] = jrat(h.value);
    j["degenerate"] = h.degenerate;
    return dump(j, indent);
}

std::string json_of_error(const std::string& kind, const std::string& message,
                          std::size_t offset, int indent) {
    json j;
    json e;
    e["kind"] = kind;
    e["message"] = message;
    if (offset != std::string::npos) e["offset"] = offset;
    j["error"] = e;
    return dump(j, indent);
}

Pencil pencil_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("T1") || !j.contains("T2"))
        throw schema_error("pencil JSON needs fields T1 and T2");
    Matrix<Rational> t1 = jget_matrix(j["T1"], "T1");
    Matrix<Rational> t2 = jget_matrix(j["T2"], "T2");
    bool sym = j.value("symmetric", false);
    return Pencil(std::move(t1), std::move(t2), sym);
}

Tensor2222 tensor2222_from_json(const std::string& text) {
    json j = parse_json(text);
    const json* entries = nullptr;
    if (j.is_array())
        entries = &j;
    else if (j.is_object() && j.contains("entries"))
        entries = &j["entries"];
    else
        throw schema_error("tensor JSON needs an 'entries' array");
    if (!entries->is_array() || entries->size() != 16)
        throw schema_error("tensor entries must be an array of 16 rationals");
    Tensor2222 z;
    for (std::size_t i = 0; i < 16; ++i) z.z[i] = jget_rational((*entries)[i], "entries");
    return z;
}

Matrix<Rational> matrix_from_json(const std::string& text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("matrix")) return jget_matrix(j["matrix"], "matrix");
    if (j.is_array()) return jget_matrix(j, "matrix");
    throw schema_error("matrix JSON must be a nested array or {\"matrix\": [[..]]}");
}

}  // namespace apolar
