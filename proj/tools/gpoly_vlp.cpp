// gpoly-vlp: command-line front end for efficient-set computations.
//
//   gpoly-vlp solve   PROBLEM [--kind efficient|weak] [--out FILE]
//   gpoly-vlp test    PROBLEM POINT [--kind efficient|weak]
//   gpoly-vlp connect PROBLEM U V [--weak]
//   gpoly-vlp cone    PROBLEM dual|lineality|decompose|ri-test [YSTAR]
//
// Points are comma-separated rationals ("0,1/2") or JSON arrays.
// Exit codes: 0 success, 2 input error, 3 internal error, 4 face limit hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gpoly/gpoly.hpp"

namespace {

using gpoly::io::json;

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitFaceLimit = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t max_faces_from_env() {
    const char* env = std::getenv("GPOLY_MAX_FACES");
    if (env == nullptr || *env == '\0') return gpoly::kDefaultMaxFaces;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(env, &pos);
        if (pos != std::string(env).size()) throw std::invalid_argument(env);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError(std::string("GPOLY_MAX_FACES: not a count: ") + env);
    }
}

gpoly::VLPProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return gpoly::io::problem_from_json(j);
}

gpoly::Vector parse_point(const std::string& text, std::size_t dim, const std::string& what) {
    gpoly::Vector v;
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        try {
            v = gpoly::io::vector_from_json(json::parse(text), what);
        } catch (const json::parse_error& e) {
            throw InputError(what + ": " + e.what());
        }
    } else {
        std::string cleaned;
        for (char c : text)
            if (c != ' ' && c != '(' && c != ')' && c != '"') cleaned += c;
        std::stringstream ss(cleaned);
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(gpoly::parse_rational(item));
    }
    if (v.size() != dim)
        throw InputError(what + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
    return v;
}

gpoly::SolutionKind parse_kind(const std::string& s) {
    return s == "weak" ? gpoly::SolutionKind::WeaklyEfficient : gpoly::SolutionKind::Efficient;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << j.dump(2) << '\n';
}

int cmd_solve(const std::string& problem, const std::string& kind, const std::string& out) {
    const auto p = load_problem(problem);
    const auto set = gpoly::solution_set(p, parse_kind(kind), max_faces_from_env());
    emit(gpoly::io::to_json(set), out);
    return 0;
}

int cmd_test(const std::string& problem, const std::string& point, const std::string& kind) {
    const auto p = load_problem(problem);
    const auto u = parse_point(point, p.decision_dim(), "point");
    const auto k = parse_kind(kind);
    const bool ok = gpoly::is_solution(p, u, k);
    json j{{gpoly::to_string(k), ok}};
    if (ok && k == gpoly::SolutionKind::Efficient) j["witness"] = gpoly::io::to_json(gpoly::scalarize_witness(p, u));
    emit(j, "");
    return 0;
}

int cmd_connect(const std::string& problem, const std::string& a, const std::string& b, bool weak) {
    const auto p = load_problem(problem);
    const auto u = parse_point(a, p.decision_dim(), "u");
    const auto v = parse_point(b, p.decision_dim(), "v");
    const auto kind = weak ? gpoly::SolutionKind::WeaklyEfficient : gpoly::SolutionKind::Efficient;
    emit(gpoly::io::to_json(gpoly::connect(p, u, v, kind)), "");
    return 0;
}

int cmd_cone(const std::string& problem, const std::string& query, const std::string& ystar) {
    const auto p = load_problem(problem);
    const auto& k = p.cone();
    const auto& d = p.decomposition();
    if (query == "dual") {
        emit({{"dual_generators", gpoly::io::to_json(d.dual_generators)}}, "");
    } else if (query == "lineality") {
        emit({{"lineality", gpoly::io::to_json(d.y0_basis)}}, "");
    } else if (query == "decompose") {
        emit(gpoly::io::to_json(d), "");
    } else if (query == "ri-test") {
        if (ystar.empty()) throw InputError("ri-test needs a functional y*");
        const auto y = parse_point(ystar, k.dim(), "y*");
        emit({{"ri_dual", gpoly::ri_dual_contains(d, y)}}, "");
    } else {
        throw InputError("unknown cone query \"" + query + "\"");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Efficient and weakly efficient sets of linear vector optimization problems"};
    app.name("gpoly-vlp");
    app.require_subcommand(1);

    std::string problem, kind = "efficient", out, point, point_v, query, ystar;
    bool weak = false;

    auto* solve = app.add_subcommand("solve", "Efficient (or weakly efficient) set as maximal faces of D");
    solve->add_option("problem", problem, "Problem file")->required();
    solve->add_option("--kind", kind, "efficient or weak")->check(CLI::IsMember({"efficient", "weak"}));
    solve->add_option("--out", out, "Write JSON here instead of stdout");

    auto* test = app.add_subcommand("test", "Test one point for (weak) efficiency");
    test->add_option("problem", problem, "Problem file")->required();
    test->add_option("point", point, "Point of D")->required();
    test->add_option("--kind", kind, "efficient or weak")->check(CLI::IsMember({"efficient", "weak"}));

    auto* conn = app.add_subcommand("connect", "Line-segment path between two efficient points");
    conn->add_option("problem", problem, "Problem file")->required();
    conn->add_option("u", point, "First endpoint")->required();
    conn->add_option("v", point_v, "Second endpoint")->required();
    conn->add_flag("--weak", weak, "Connect inside the weakly efficient set");

    auto* cone = app.add_subcommand("cone", "Ordering-cone data");
    cone->add_option("problem", problem, "Problem file")->required();
    cone->add_option("query", query, "dual, lineality, decompose or ri-test")->required();
    cone->add_option("ystar", ystar, "Functional for ri-test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*solve) return cmd_solve(problem, kind, out);
        if (*test) return cmd_test(problem, point, kind);
        if (*conn) return cmd_connect(problem, point, point_v, weak);
        if (*cone) return cmd_cone(problem, query, ystar);
    } catch (const gpoly::FaceLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFaceLimit;
    } catch (const gpoly::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const gpoly::Error& e) {
        // Parse, dimension, infeasible point, non-efficient endpoint.
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
