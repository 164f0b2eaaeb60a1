#include "hc/serialize.hpp"

#include <nlohmann/json.hpp>

namespace hc {

using json = nlohmann::ordered_json;

namespace {

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw ScalarError("integer too large for serialization");
    return z.get_si();
}

json scalar_to_json(const Scalar& s) {
    json out = json::array();
    if (s.characteristic() == 0) {
        for (const auto& [d, c] : s.quad_value().terms())
            out.push_back({d, to_long(c.numerator()), to_long(c.denominator())});
    } else {
        const FpScalar& f = s.fp_value();
        out = {f.p(), f.a(), f.b()};
    }
    return out;
}

Scalar scalar_from_json(const json& j, std::uint32_t p) {
    if (p == 0) {
        QuadScalar q;
        for (const auto& term : j) {
            long d = term.at(0).get<long>();
            Rational coeff = make_rational(term.at(1).get<long>(),
                                           term.at(2).get<long>());
            q = q + QuadScalar::root_term(coeff, d);
        }
        return Scalar::quad(q);
    }
    return Scalar::fp(FpScalar(j.at(0).get<std::uint32_t>(),
                               j.at(1).get<std::uint32_t>(),
                               j.at(2).get<std::uint32_t>()));
}

json matrix_to_json(const SMat& m) {
    json triplets = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            triplets.push_back({r, c, scalar_to_json(v)});
    return triplets;
}

std::string weight_csv(const WeightVector& w) {
    std::string s;
    for (int k = 0; k < w.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(w.entries[k]);
    }
    return s;
}

}  // namespace

std::string module_to_json(const SuperModule& m) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "supermodule";
    out["p"] = m.p;
    out["n"] = m.n;
    out["dimension"] = m.dim();
    out["basis"] = m.basis;
    out["parity"] = m.parity;
    if (!m.weights.empty()) {
        json w = json::array();
        for (const auto& wv : m.weights) w.push_back(weight_csv(wv));
        out["weights"] = w;
    }
    json action;
    for (const auto& [name, mat] : m.action) action[name] = matrix_to_json(mat);
    out["action"] = action;
    return out.dump(1);
}

SuperModule module_from_json(const std::string& text) {
    json in = json::parse(text);
    if (in.at("kind").get<std::string>() != "supermodule")
        throw ScalarError("not a module file");
    SuperModule m;
    m.p = in.at("p").get<std::uint32_t>();
    m.n = in.at("n").get<int>();
    m.basis = in.at("basis").get<std::vector<std::string>>();
    m.parity = in.at("parity").get<std::vector<int>>();
    int dim = in.at("dimension").get<int>();
    if (dim != static_cast<int>(m.basis.size()))
        throw ScalarError("dimension does not match the basis");
    if (in.contains("weights")) {
        for (const auto& s : in.at("weights"))
            m.weights.push_back(parse_weight(s.get<std::string>(), m.p));
    }
    for (const auto& [name, triplets] : in.at("action").items()) {
        SMat mat(dim, dim, m.p);
        for (const auto& t : triplets)
            mat.set(t.at(0).get<int>(), t.at(1).get<int>(),
                    scalar_from_json(t.at(2), m.p));
        m.action[name] = std::move(mat);
    }
    return m;
}

std::string report_to_json(const Report& r) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "report";
    out["campaign"] = r.campaign;
    out["n"] = r.n;
    out["p"] = r.p;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc;
        jc["name"] = c.name;
        jc["rule"] = c.rule;
        jc["pass"] = c.pass;
        if (!c.pass && !c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(jc);
    }
    out["checks"] = checks;
    out["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}};
    return out.dump(1);
}

std::string labels_to_json(const std::vector<ClassLabel>& labels, int n,
                           std::uint32_t p, bool finite) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = finite ? "finite-labels" : "affine-labels";
    out["n"] = n;
    out["p"] = p;
    json arr = json::array();
    for (const auto& l : labels) {
        json jl;
        if (l.finite)
            jl["partition"] = l.partition.parts;
        jl["rows"] = json::array();
        for (auto [lo, hi] : l.diagram.rows) jl["rows"].push_back({lo, hi});
        if (l.star_u > 0) jl["strip_u"] = l.star_u;
        jl["f"] = l.f;
        jl["gamma0"] = l.g0;
        jl["dim"] = l.dim_simple;
        jl["dim_thick"] = l.dim_thick;
        jl["type"] = std::string(1, l.type);
        jl["weight"] = weight_csv(label_weight(l, p));
        arr.push_back(jl);
    }
    out["labels"] = arr;
    out["count"] = labels.size();
    return out.dump(1);
}

std::string pbw_to_json(const PBWElement& e) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "element";
    out["n"] = e.rank();
    out["p"] = e.characteristic();
    json terms = json::array();
    for (const auto& [m, c] : e.terms()) {
        json beta = json::array();
        for (char b : m.beta) beta.push_back(static_cast<int>(b));
        json w = json::array();
        for (int v : m.w.one_line()) w.push_back(v + 1);
        terms.push_back({m.alpha, beta, w, scalar_to_json(c)});
    }
    out["terms"] = terms;
    return out.dump(1);
}

std::string tableau_to_json(const PlacedTableau& t) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "placed-tableau";
    json boxes = json::array();
    for (int r = 0; r < t.diagram.row_count(); ++r) {
        auto [lo, hi] = t.diagram.rows[r];
        for (int c = lo; c <= hi; ++c)
            boxes.push_back({{"row", r},
                             {"content", c},
                             {"label", t.tableau.labels[r][c - lo]}});
    }
    out["boxes"] = boxes;
    return out.dump(1);
}

}  // namespace hc
