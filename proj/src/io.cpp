#include "tspl/io.hpp"

#include <cmath>
#include <fstream>

#include "tspl/errors.hpp"

namespace tspl {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& ptr) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field", ptr + "/" + key);
    return *it;
}

double number(const json& j, const std::string& ptr) {
    if (!j.is_number()) throw ParseError("expected a number", ptr);
    return j.get<double>();
}

double number_field(const json& j, const char* key, const std::string& ptr) {
    return number(require(j, key, ptr), ptr + "/" + key);
}

std::vector<double> number_array(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw ParseError("expected an array of numbers", ptr);
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number(j[i], ptr + "/" + std::to_string(i)));
    }
    return out;
}

TimeScale parse_timescale(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw ParseError("expected an object", ptr);
    const json& comps = require(j, "components", ptr);
    if (!comps.is_array() || comps.empty()) {
        throw ParseError("expected a non-empty array", ptr + "/components");
    }
    std::vector<Component> components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string cptr = ptr + "/components/" + std::to_string(i);
        const json& c = comps[i];
        if (!c.is_object()) throw ParseError("expected an object", cptr);
        if (c.contains("interval")) {
            const auto ends = number_array(c["interval"], cptr + "/interval");
            if (ends.size() != 2) throw ParseError("interval needs [lo, hi]", cptr + "/interval");
            components.push_back(ClosedInterval{ends[0], ends[1]});
        } else if (c.contains("point")) {
            components.push_back(IsolatedPoint{number(c["point"], cptr + "/point")});
        } else {
            throw ParseError("component needs \"interval\" or \"point\"", cptr);
        }
    }
    const double h_max = number_field(j, "h_max", ptr);
    return TimeScale(std::move(components), h_max);
}

Nonlinearity parse_nonlinearity(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw ParseError("expected an object", ptr);
    const json& kind = require(j, "kind", ptr);
    if (!kind.is_string()) throw ParseError("expected a string", ptr + "/kind");
    const std::string name = kind.get<std::string>();
    if (name == "ntc") return Nonlinearity::ntc(number_field(j, "k", ptr));
    if (name == "constant") return Nonlinearity::constant(number_field(j, "c", ptr));
    if (name == "power") {
        return Nonlinearity::power(number_field(j, "c", ptr), number_field(j, "alpha", ptr));
    }
    if (name == "tabulated") {
        return Nonlinearity::tabulated(number_array(require(j, "s", ptr), ptr + "/s"),
                                       number_array(require(j, "f", ptr), ptr + "/f"));
    }
    throw ParseError("unknown nonlinearity kind \"" + name + "\"", ptr + "/kind");
}

} // namespace

Problem parse_problem(const json& doc) {
    if (!doc.is_object()) throw ParseError("problem document must be a JSON object", "");
    TimeScale ts = parse_timescale(require(doc, "timescale", ""), "/timescale");
    Nonlinearity f = parse_nonlinearity(require(doc, "f", ""), "/f");
    ProblemSpec spec(number_field(doc, "p", ""), number_field(doc, "k", ""),
                     number_field(doc, "lambda", ""), number_field(doc, "beta", ""),
                     number_field(doc, "eta", ""), std::move(ts), std::move(f));

    SolverConfig solver;
    if (doc.contains("solver")) {
        const json& s = doc["solver"];
        if (!s.is_object()) throw ParseError("expected an object", "/solver");
        if (s.contains("tol")) solver.tol = number(s["tol"], "/solver/tol");
        if (s.contains("max_iter")) {
            if (!s["max_iter"].is_number_integer()) {
                throw ParseError("expected an integer", "/solver/max_iter");
            }
            solver.max_iter = s["max_iter"].get<int>();
        }
        if (s.contains("relax")) solver.relax = number(s["relax"], "/solver/relax");
        if (s.contains("init")) solver.init = number(s["init"], "/solver/init");
        if (s.contains("seed")) {
            if (!s["seed"].is_number_integer()) throw ParseError("expected an integer", "/solver/seed");
            solver.seed = s["seed"].get<std::uint64_t>();
        }
        if (!(solver.tol > 0.0)) throw ValidationError("tol must be positive", "/solver/tol");
        if (solver.max_iter < 1) throw ValidationError("max_iter must be at least 1", "/solver/max_iter");
        if (!(solver.relax > 0.0 && solver.relax <= 1.0)) {
            throw ValidationError("relax must lie in (0, 1]", "/solver/relax");
        }
        if (!(solver.init >= 0.0)) throw ValidationError("init must be nonnegative", "/solver/init");
    }

    std::optional<ExistenceParams> existence;
    if (doc.contains("existence")) {
        const json& e = doc["existence"];
        if (!e.is_object()) throw ParseError("expected an object", "/existence");
        ExistenceParams params{number_field(e, "a", "/existence"), number_field(e, "b", "/existence")};
        if (!(params.a > 0.0)) throw ValidationError("a must be positive", "/existence/a");
        if (!(params.b > 0.0)) throw ValidationError("b must be positive", "/existence/b");
        existence = params;
    }

    return Problem{std::move(spec), solver, existence};
}

Problem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(doc);
}

json to_json(const ConeReport& cone) {
    return json{{"nonneg", cone.nonneg},
                {"nonneg_violation", cone.nonneg_violation},
                {"concave", cone.concave},
                {"concave_violation", cone.concave_violation},
                {"harnack", cone.harnack},
                {"harnack_margin", cone.harnack_margin},
                {"rho_cone", cone.rho_cone}};
}

json to_json(const SolveReport& report) {
    const Grid& grid = report.solution.grid();
    return json{{"t", grid.points()},
                {"u", report.solution.values()},
                {"converged", report.converged},
                {"iterations", report.iterations},
                {"history", report.history},
                {"residual_sup", report.residual_sup},
                {"boundary", json{{"r1", report.r1}, {"r2", report.r2}}},
                {"cone", to_json(report.cone)},
                {"norm", report.norm},
                {"clamped_points", report.clamped_points},
                {"state", json{{"integral_f", report.integral_f},
                               {"denom", report.denom},
                               {"A", report.A},
                               {"B", report.B}}}};
}

namespace {

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

} // namespace

json to_json(const ExistenceReport& report) {
    json j{{"a", report.a},
           {"b", report.b},
           {"rho_cone", report.rho},
           {"f_range_a", json{{"inf", report.inf_f_a}, {"sup", report.sup_f_a}}},
           {"f_range_b", json{{"inf", report.inf_f_b}, {"sup", report.sup_f_b}}},
           {"A1", finite_or_null(report.A1)},
           {"B1", finite_or_null(report.B1)},
           {"degenerate_a", report.degenerate_a},
           {"H2", json{{"holds", report.h2_holds},
                       {"lhs", report.h2_lhs},
                       {"rhs", finite_or_null(report.h2_rhs)}}},
           {"H3", json{{"holds", report.h3_holds},
                       {"lhs", report.h3_lhs},
                       {"rhs", finite_or_null(report.h3_rhs)}}},
           {"chain", json{{"a_bound", finite_or_null(report.chain_a)},
                          {"a_holds", report.chain_a_holds},
                          {"b_bound", finite_or_null(report.chain_b)},
                          {"b_holds", report.chain_b_holds}}}};
    if (report.lambda_star) {
        j["lambda_star"] = *report.lambda_star;
    } else {
        j["lambda_star"] = nullptr;
    }
    return j;
}

json to_json(const LimitReport& report) {
    return json{{"f0", to_string(report.f0)},
                {"finf", to_string(report.finf)},
                {"corollary_applies", report.corollary_applies}};
}

} // namespace tspl
