#include "quatloc/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace quatloc {

json quat_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("quaternion must be an array of 4 numbers");
    for (const auto& v : j)
        if (!v.is_number()) throw std::invalid_argument("quaternion components must be numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json matrix_to_json(const QMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.size(); ++j) row.push_back(quat_to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", a.size()}, {"entries", std::move(rows)}};
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON needs fields n and entries");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix entries must hold n rows");
    QMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix row " + std::to_string(i) +
                                        " must hold n quaternions");
        for (int k = 0; k < n; ++k) a.at(i, k) = quat_from_json(row[k]);
    }
    return a;
}

json poly_to_json(const QPolynomial& p) {
    json cs = json::array();
    for (const Quaternion& q : p.coeffs()) cs.push_back(quat_to_json(q));
    return json{{"side", p.side() == Side::left ? "left" : "right"}, {"coeffs", std::move(cs)}};
}

QPolynomial poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("side") || !j.contains("coeffs"))
        throw std::invalid_argument("polynomial JSON needs fields side and coeffs");
    const std::string side = j.at("side").get<std::string>();
    if (side != "left" && side != "right")
        throw std::invalid_argument("polynomial side must be \"left\" or \"right\"");
    const json& cs = j.at("coeffs");
    if (!cs.is_array() || cs.size() < 2)
        throw std::invalid_argument("polynomial needs at least two coefficients");
    std::vector<Quaternion> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& c : cs) coeffs.push_back(quat_from_json(c));
    if (coeffs.back() != Quaternion::real(1.0))
        throw std::invalid_argument("polynomial must be monic: last coefficient [1,0,0,0]");
    return {side == "left" ? Side::left : Side::right, std::move(coeffs)};
}

json region_to_json(const Region& r) {
    switch (r.kind) {
        case Region::Kind::ball:
            return json{{"kind", "ball"}, {"center", quat_to_json(r.center)}, {"radius", r.radius}};
        case Region::Kind::cassini:
            return json{{"kind", "cassini"},
                        {"c1", quat_to_json(r.c1)},
                        {"c2", quat_to_json(r.c2)},
                        {"bound", r.radius}};
        default: {
            json parts = json::array();
            for (const Region& p : r.parts) parts.push_back(region_to_json(p));
            return json{{"kind", r.kind == Region::Kind::union_of ? "union" : "intersection"},
                        {"parts", std::move(parts)}};
        }
    }
}

Region region_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ball") return Region::ball(quat_from_json(j.at("center")), j.at("radius"));
    if (kind == "cassini")
        return Region::cassini(quat_from_json(j.at("c1")), quat_from_json(j.at("c2")),
                               j.at("bound"));
    if (kind == "union" || kind == "intersection") {
        std::vector<Region> parts;
        for (const auto& p : j.at("parts")) parts.push_back(region_from_json(p));
        return kind == "union" ? Region::union_of(std::move(parts))
                               : Region::intersection_of(std::move(parts));
    }
    throw std::invalid_argument("unknown region kind: " + kind);
}

json bound_report_to_json(const BoundReport& r) {
    json params{{"gamma", r.params.gamma}};
    const bool is_power = r.method == BoundMethod::power || r.method == BoundMethod::pc1a ||
                          r.method == BoundMethod::pc1b || r.method == BoundMethod::pc2a ||
                          r.method == BoundMethod::pc2b;
    if (is_power) {
        params["t"] = r.params.t;
        params["variant"] = r.params.variant == PowerVariant::plain ? "plain" : "conjugate";
    }
    if (!r.params.weights.empty()) params["weights"] = r.params.weights;
    return json{{"method", bound_method_name(r.method)},
                {"params", std::move(params)},
                {"lower", r.lower},
                {"upper", r.upper},
                {"lower_defined", r.lower_defined}};
}

json roots_to_json(const RootSet& r) {
    json iso = json::array();
    for (const Quaternion& z : r.isolated) iso.push_back(quat_to_json(z));
    json sph = json::array();
    for (const SphericalClass& s : r.spherical) sph.push_back({{"re", s.re}, {"im", s.im_norm}});
    return json{{"isolated", std::move(iso)},
                {"spherical", std::move(sph)},
                {"moduli", r.moduli()},
                {"residual_tol", r.residual_tol}};
}

json discs_to_json(const std::vector<DiscDescriptor>& discs) {
    json out = json::array();
    for (const DiscDescriptor& d : discs) {
        if (d.kind == DiscDescriptor::Kind::disc)
            out.push_back({{"kind", "disc"},
                           {"center", {d.center.real(), d.center.imag()}},
                           {"radius", d.value}});
        else
            out.push_back({{"kind", "cassini"},
                           {"c1", {d.center.real(), d.center.imag()}},
                           {"c2", {d.c2.real(), d.c2.imag()}},
                           {"bound", d.value}});
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

namespace {

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

}  // namespace

std::string schema_validate(const json& schema, const json& value) {
    if (schema.contains("const") && value != schema.at("const")) return "const mismatch";
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema.at("enum"))
            if (e == value) ok = true;
        if (!ok) return "value not in enum";
    }
    if (schema.contains("type")) {
        const auto& t = schema.at("type");
        if (t.is_string()) {
            if (!type_matches(t.get<std::string>(), value))
                return "expected type " + t.get<std::string>();
        } else {
            bool ok = false;
            for (const auto& tt : t)
                if (type_matches(tt.get<std::string>(), value)) ok = true;
            if (!ok) return "type not among alternatives";
        }
    }
    if (value.is_number() && schema.contains("minimum") &&
        value.get<double>() < schema.at("minimum").get<double>())
        return "below minimum";
    if (value.is_number() && schema.contains("maximum") &&
        value.get<double>() > schema.at("maximum").get<double>())
        return "above maximum";
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema.at("minItems").get<size_t>())
            return "too few items";
        if (schema.contains("maxItems") && value.size() > schema.at("maxItems").get<size_t>())
            return "too many items";
        if (schema.contains("items")) {
            const json& items = schema.at("items");
            for (size_t i = 0; i < value.size(); ++i) {
                const std::string err = schema_validate(items, value[i]);
                if (!err.empty()) return "item " + std::to_string(i) + ": " + err;
            }
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema.at("required"))
                if (!value.contains(k.get<std::string>()))
                    return "missing required field " + k.get<std::string>();
        const bool closed = schema.contains("additionalProperties") &&
                            schema.at("additionalProperties").is_boolean() &&
                            !schema.at("additionalProperties").get<bool>();
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                const std::string err = schema_validate(props.at(it.key()), it.value());
                if (!err.empty()) return it.key() + ": " + err;
            } else if (closed) {
                return "unexpected field " + it.key();
            }
        }
    }
    return "";
}

}  // namespace quatloc
