#pragma once

// JSON forms of the library's values. Every number is a rational string
// "p/q" (or "p"); JSON integers are also accepted on input.
//
//   HRep:  {"dim": n, "eq": [[a_1, ..., a_n, b], ...], "ineq": [[a_1, ..., a_n, b], ...]}
//          each row is a constraint a.x = b (resp. a.x <= b), rhs last
//   VRep:  {"dim": n, "points": [[...]], "rays": [[...]], "lineality": [[...]]}
//   ConeH: {"dim": q, "normals": [[...]]}
//   ProblemFile: {"version": "1", "M": [[...]], "D": HRep, "K": ConeH}
//
// Parse errors carry the JSON path of the offending value.

#include <json.hpp>

#include <string>
#include <vector>

#include "gpoly/cone.hpp"
#include "gpoly/polyhedron.hpp"
#include "gpoly/vlp.hpp"

namespace gpoly::io {

using json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

inline ParseError located(const std::string& path, const std::string& msg) {
    return ParseError(path + ": " + msg);
}

inline Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw located(path, e.what());
        }
    }
    if (j.is_number_integer()) return parse_rational(j.dump());
    throw located(path, "expected a rational string");
}

inline Vector vector_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) throw located(path, "expected an array");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline std::vector<Vector> vectors_from_json(const json& j, const std::string& path, std::size_t dim) {
    if (!j.is_array()) throw located(path, "expected an array of vectors");
    std::vector<Vector> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        Vector v = vector_from_json(j[i], p);
        if (v.size() != dim)
            throw located(p, "expected length " + std::to_string(dim) + ", got " + std::to_string(v.size()));
        out.push_back(std::move(v));
    }
    return out;
}

inline std::size_t dim_from_json(const json& j, const std::string& path) {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw located(path + ".dim", "expected a nonnegative integer");
    return j["dim"].get<std::size_t>();
}

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json to_json(const std::vector<Vector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline json to_json(const Matrix& m) { return to_json(m.row_vectors()); }

// --- HRep

inline json to_json(const HRep& h) {
    auto rows = [](const Matrix& lhs, const Vector& rhs) {
        json a = json::array();
        for (std::size_t i = 0; i < lhs.rows(); ++i) {
            Vector r = lhs.row_vector(i);
            r.push_back(rhs[i]);
            a.push_back(to_json(r));
        }
        return a;
    };
    return {{"dim", h.dim}, {"eq", rows(h.eq_lhs, h.eq_rhs)}, {"ineq", rows(h.ineq_lhs, h.ineq_rhs)}};
}

inline HRep hrep_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw located(path, "expected an object");
    const std::size_t n = dim_from_json(j, path);
    HRep h(n);
    for (const char* key : {"eq", "ineq"}) {
        if (!j.contains(key)) continue;
        const auto rows = vectors_from_json(j[key], path + "." + key, n + 1);
        for (const auto& r : rows) {
            Vector a(r.begin(), r.end() - 1);
            if (std::string(key) == "eq")
                h.add_eq(a, r.back());
            else
                h.add_ineq(a, r.back());
        }
    }
    return h;
}

// --- VRep

inline json to_json(const VRep& v) {
    return {{"dim", v.dim}, {"points", to_json(v.points)}, {"rays", to_json(v.rays)},
            {"lineality", to_json(v.lineality)}};
}

inline VRep vrep_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw located(path, "expected an object");
    VRep v;
    v.dim = dim_from_json(j, path);
    if (j.contains("points")) v.points = vectors_from_json(j["points"], path + ".points", v.dim);
    if (j.contains("rays")) v.rays = vectors_from_json(j["rays"], path + ".rays", v.dim);
    if (j.contains("lineality")) v.lineality = vectors_from_json(j["lineality"], path + ".lineality", v.dim);
    return v;
}

// --- ConeH

inline json to_json(const ConeH& k) { return {{"dim", k.dim()}, {"normals", to_json(k.normals())}}; }

inline ConeH cone_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw located(path, "expected an object");
    const std::size_t q = dim_from_json(j, path);
    std::vector<Vector> normals;
    if (j.contains("normals")) normals = vectors_from_json(j["normals"], path + ".normals", q);
    for (std::size_t i = 0; i < normals.size(); ++i)
        if (is_zero(normals[i])) throw located(path + ".normals[" + std::to_string(i) + "]", "normal must be nonzero");
    return ConeH(q, std::move(normals));
}

inline json to_json(const ConeDecomposition& d) {
    return {{"y0_basis", to_json(d.y0_basis)}, {"y1_basis", to_json(d.y1_basis)},
            {"k1_rays", to_json(d.k1_rays)}, {"dual_generators", to_json(d.dual_generators)},
            {"subspace", d.is_subspace()}};
}

// --- Problem files

inline VLPProblem problem_from_json(const json& j) {
    if (!j.is_object()) throw located("$", "expected an object");
    if (!j.contains("version") || !j["version"].is_string()) throw located("$.version", "missing version string");
    if (j["version"].get<std::string>() != kFormatVersion)
        throw located("$.version", "unsupported version \"" + j["version"].get<std::string>() + "\"");
    for (const char* key : {"M", "D", "K"})
        if (!j.contains(key)) throw located(std::string("$.") + key, "missing");
    HRep d = hrep_from_json(j["D"], "$.D");
    ConeH k = cone_from_json(j["K"], "$.K");
    const auto rows = vectors_from_json(j["M"], "$.M", d.dim);
    if (rows.size() != k.dim())
        throw located("$.M", "expected " + std::to_string(k.dim()) + " rows (K.dim), got " + std::to_string(rows.size()));
    return VLPProblem(Matrix::from_rows(rows, d.dim), std::move(d), std::move(k));
}

inline json to_json(const VLPProblem& p) {
    return {{"version", kFormatVersion}, {"M", to_json(p.objective())}, {"D", to_json(p.feasible_set())},
            {"K", to_json(p.cone())}};
}

// --- Results

inline json to_json(const Face& f) { return {{"active_ineq", f.active_ineq}, {"vrep", to_json(f.geometry)}}; }

inline json to_json(const EfficientSet& e) {
    json faces = json::array();
    for (const auto& f : e.faces) faces.push_back(to_json(f));
    return {{"kind", to_string(e.kind)},
            {"branch", {{"subspace_cone", e.subspace_cone}, {"empty_interior", e.empty_interior}}},
            {"faces", faces}};
}

inline json to_json(const PathCertificate& c) {
    json bps = json::array();
    for (const auto& t : c.breakpoints) bps.push_back(to_string(t));
    return {{"points", to_json(c.points)}, {"weights", to_json(c.weights)}, {"breakpoints", bps}};
}

}  // namespace gpoly::io
