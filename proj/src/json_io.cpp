#include "avalg/json_io.hpp"

#include <stdexcept>

namespace avalg {

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

Json vec_to_json(const VecQ& v) {
    Json out = Json::array();
    for (const Rat& r : v) out.push_back(rat_to_json(r));
    return out;
}

VecQ vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array");
    VecQ v;
    for (const Json& e : j) v.push_back(rat_from_json(e));
    return v;
}

Json mat_to_json(const MatQ& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

Json iso_spec_to_json(const IsoSpec& spec) {
    Json j;
    j["form"] = spec.form;
    if (spec.a) j["a"] = vec_to_json(*spec.a);
    if (spec.b) j["b"] = vec_to_json(*spec.b);
    if (spec.negate) j["negate"] = true;
    return j;
}

IsoSpec iso_spec_from_json(const Json& j) {
    IsoSpec spec;
    spec.form = j.at("form").get<std::string>();
    if (j.contains("a")) spec.a = vec_from_json(j.at("a"));
    if (j.contains("b")) spec.b = vec_from_json(j.at("b"));
    if (j.contains("negate")) spec.negate = j.at("negate").get<bool>();
    return spec;
}

Json alg_spec_to_json(const AlgSpec& spec) {
    Json j;
    j["kind"] = spec.kind;
    if (spec.kind == "named") j["name"] = spec.name;
    if (spec.kind == "star") {
        j["base"] = spec.base;
        j["variant"] = spec.variant;
    }
    if (spec.kind == "isotope") j["family"] = spec.family;
    if (spec.kind == "A_phi") j["base"] = spec.base;
    if (spec.a) j["a"] = vec_to_json(*spec.a);
    if (spec.b) j["b"] = vec_to_json(*spec.b);
    if (spec.phi) j["phi"] = iso_spec_to_json(*spec.phi);
    if (spec.psi) j["psi"] = iso_spec_to_json(*spec.psi);
    if (spec.kind == "structure") {
        j["dim"] = spec.dim;
        Json cs = Json::array();
        for (const VecQ& v : spec.constants) cs.push_back(vec_to_json(v));
        j["constants"] = cs;
    }
    return j;
}

AlgSpec alg_spec_from_json(const Json& j) {
    AlgSpec spec;
    spec.kind = j.at("kind").get<std::string>();
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    if (j.contains("base")) spec.base = j.at("base").get<std::string>();
    if (j.contains("variant")) spec.variant = j.at("variant").get<std::string>();
    if (j.contains("family")) spec.family = j.at("family").get<int>();
    if (j.contains("a")) spec.a = vec_from_json(j.at("a"));
    if (j.contains("b")) spec.b = vec_from_json(j.at("b"));
    if (j.contains("phi")) spec.phi = iso_spec_from_json(j.at("phi"));
    if (j.contains("psi")) spec.psi = iso_spec_from_json(j.at("psi"));
    if (j.contains("dim")) spec.dim = j.at("dim").get<int>();
    if (j.contains("constants")) {
        for (const Json& row : j.at("constants")) spec.constants.push_back(vec_from_json(row));
    }
    return spec;
}

Json identity_report_to_json(const IdentityReport& rep) {
    Json j;
    j["id"] = rep.id;
    j["holds"] = rep.holds;
    j["method"] = rep.method;
    if (rep.witness) {
        Json w;
        Json pts = Json::array();
        for (const VecQ& p : rep.witness->points) pts.push_back(vec_to_json(p));
        w["points"] = pts;
        w["note"] = rep.witness->note;
        j["witness"] = w;
    }
    return j;
}

Json fingerprint_to_json(const Fingerprint& fp) {
    Json j;
    j["dim"] = fp.dim;
    j["dim_A_e"] = fp.dim_fixed;
    j["dim_neg_R_e"] = fp.dim_neg;
    j["degree"] = fp.degree;
    return j;
}

Json witness_to_json(const IsoWitness& w) {
    Json j;
    j["source"] = w.source;
    j["target"] = w.target;
    j["verified"] = w.verified;
    if (!w.note.empty()) j["note"] = w.note;
    j["map"] = mat_to_json(w.map);
    return j;
}

Json classification_to_json(const Classification& c) {
    Json j;
    j["label"] = class_label_str(c.label);
    if (c.family) {
        Json f;
        f["tag"] = family_str(c.family->tag);
        if (c.family->a) f["a"] = vec_to_json(c.family->a->to_vec());
        if (c.family->b) f["b"] = vec_to_json(c.family->b->to_vec());
        if (c.family->tag == FamilyKind::S3) f["psi_sign"] = c.family->psi_sign;
        j["family"] = f;
    }
    j["fingerprint"] = fingerprint_to_json(c.fingerprint);
    Json ws = Json::array();
    for (const IsoWitness& w : c.witnesses) {
        Json e;
        e["target"] = w.target;
        e["verified"] = w.verified;
        if (!w.note.empty()) e["note"] = w.note;
        ws.push_back(e);
    }
    j["witnesses"] = ws;
    j["errata_flags"] = c.errata_flags;
    return j;
}

}  // namespace avalg
