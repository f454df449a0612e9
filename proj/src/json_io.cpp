#include "json_io.hpp"

namespace qpair {

namespace {

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw domain_error(std::string("expected rational string field \"") + key + "\"");
    return Rational::from_string(j[key].get<std::string>());
}

void require_version(const json& j) {
    if (!j.contains("format_version")) return;  // tolerated on input
    if (!j["format_version"].is_number_integer() || j["format_version"].get<long>() != 1)
        throw domain_error("unsupported format_version");
}

}  // namespace

json quaternion_to_json(const Quaternion& q) {
    json j;
    j["r"] = q.r.to_string();
    j["i"] = q.i.to_string();
    j["j"] = q.j.to_string();
    j["k"] = q.k.to_string();
    return j;
}

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_object()) throw domain_error("quaternion must be an object");
    return Quaternion(rational_field(j, "r"), rational_field(j, "i"), rational_field(j, "j"),
                      rational_field(j, "k"));
}

json pair_to_json(const Pair& p) {
    json j;
    j["format_version"] = 1;
    j["quaternionic_dimension"] = p.k();
    json rows = json::array();
    for (long r = 0; r < p.dim(); ++r) {
        json row = json::array();
        for (const Quaternion& q : p.basis_row(r)) row.push_back(quaternion_to_json(q));
        rows.push_back(std::move(row));
    }
    j["subspace_basis"] = std::move(rows);
    return j;
}

Pair pair_from_json(const json& j) {
    if (!j.is_object()) throw domain_error("pair file must be a JSON object");
    require_version(j);
    if (!j.contains("quaternionic_dimension") || !j["quaternionic_dimension"].is_number_integer())
        throw domain_error("missing integer field \"quaternionic_dimension\"");
    long k = j["quaternionic_dimension"].get<long>();
    if (!j.contains("subspace_basis") || !j["subspace_basis"].is_array())
        throw domain_error("missing array field \"subspace_basis\"");
    std::vector<std::vector<Quaternion>> rows;
    for (const json& row : j["subspace_basis"]) {
        if (!row.is_array()) throw domain_error("basis vector must be an array of quaternions");
        std::vector<Quaternion> qs;
        for (const json& q : row) qs.push_back(quaternion_from_json(q));
        rows.push_back(std::move(qs));
    }
    return Pair(k, rows);
}

json torsion_orbit_to_json(const TorsionOrbit& o) {
    json j;
    json coeffs = json::array();
    for (const auto& c : o.support_form.coeffs()) coeffs.push_back(c.to_string());
    j["support_form"] = std::move(coeffs);
    j["partition"] = o.partition;
    if (!o.numeric_support.empty()) {
        json pts = json::array();
        for (const auto& p : o.numeric_support) pts.push_back({p[0], p[1], p[2]});
        j["numeric_support"] = std::move(pts);
    }
    return j;
}

TorsionOrbit torsion_orbit_from_json(const json& j) {
    TorsionOrbit o;
    if (!j.contains("support_form") || !j["support_form"].is_array() ||
        j["support_form"].empty())
        throw domain_error("torsion orbit needs a \"support_form\" coefficient array");
    std::vector<GaussianRational> coeffs;
    for (const json& c : j["support_form"])
        coeffs.push_back(GaussianRational::from_string(c.get<std::string>()));
    std::size_t degree = coeffs.size() - 1;
    o.support_form = BinaryForm(degree, std::move(coeffs));
    if (!j.contains("partition") || !j["partition"].is_array())
        throw domain_error("torsion orbit needs a \"partition\" array");
    for (const json& p : j["partition"]) o.partition.push_back(p.get<long>());
    return o;
}

json signature_to_json(const SheafSignature& s) {
    json j;
    j["kernel_degrees"] = s.kernel_degrees;
    j["cokernel_degrees"] = s.cokernel_degrees;
    json tors = json::array();
    for (const auto& o : s.torsion) tors.push_back(torsion_orbit_to_json(o));
    j["torsion"] = std::move(tors);
    return j;
}

SheafSignature signature_from_json(const json& j, long k, long dim_u) {
    SheafSignature s;
    s.k = k;
    s.dim_u = dim_u;
    if (!j.is_object()) throw domain_error("signature must be an object");
    for (const json& d : j.value("kernel_degrees", json::array()))
        s.kernel_degrees.push_back(d.get<long>());
    for (const json& d : j.value("cokernel_degrees", json::array()))
        s.cokernel_degrees.push_back(d.get<long>());
    for (const json& o : j.value("torsion", json::array()))
        s.torsion.push_back(torsion_orbit_from_json(o));
    return s;
}

json factors_to_json(const FactorSignature& f) {
    json arr = json::array();
    for (const auto& fac : f.factors) {
        json j;
        j["type"] = factor_type_name(fac.type);
        j["k"] = fac.k;
        j["mult"] = fac.mult;
        if (fac.support) {
            json coeffs = json::array();
            for (const auto& c : fac.support->coeffs()) coeffs.push_back(c.to_string());
            j["support"] = std::move(coeffs);
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

namespace {

json basis_to_json(const MatrixQ& rows) {
    json arr = json::array();
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        json row = json::array();
        for (const Quaternion& q : row_to_quaternions(rows.row(r)))
            row.push_back(quaternion_to_json(q));
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace

json filtration_to_json(const Filtration& f) {
    json j;
    json dims;
    dims["e_minus_k"] = f.dims.e_minus_k;
    dims["u_minus_dim"] = f.dims.u_minus_dim;
    dims["e_mid_k"] = f.dims.e_mid_k;
    dims["u_mid_dim"] = f.dims.u_mid_dim;
    j["dims"] = std::move(dims);
    j["bases_complete"] = f.bases_complete;
    json bases;
    if (f.u_minus) bases["u_minus"] = basis_to_json(*f.u_minus);
    if (f.e_minus) bases["e_minus"] = basis_to_json(*f.e_minus);
    if (f.u_mid) bases["u_mid"] = basis_to_json(*f.u_mid);
    if (f.e_mid) bases["e_mid"] = basis_to_json(*f.e_mid);
    if (!bases.empty()) j["bases"] = std::move(bases);
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

json report_to_json(const Pair& p, const Classification& cls, const Filtration* filtration) {
    json j;
    j["format_version"] = 1;
    j["input"] = pair_to_json(p);
    j["sheaf"] = signature_to_json(cls.sheaf);
    j["factors"] = factors_to_json(cls.factors);
    if (filtration) j["filtration"] = filtration_to_json(*filtration);
    j["augmented"] = is_augmented(cls.factors);
    j["strengthened"] = is_strengthened(cls.factors);
    j["orientation_anchor"] = "O(2) for (R,H)";
    return j;
}

json pencil_debug_json(const Pencil& p) {
    json j;
    j["k"] = p.k;
    j["m"] = p.m;
    auto dump = [](const MatrixG& m) {
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["A"] = dump(p.a);
    j["B"] = dump(p.b);
    return j;
}

std::string dump_canonical(const json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw domain_error("malformed JSON input");
    return j;
}

}  // namespace qpair
