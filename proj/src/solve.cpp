#include "curvatura/solve.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "curvatura/parallelism.hpp"
#include "curvatura/quad.hpp"
#include "curvatura/trig.hpp"

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;

double require_number(const ojson& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw SchemaError(std::string("params.") + key + " must be a number");
    double v = obj[key].get<double>();
    if (!std::isfinite(v)) throw SchemaError(std::string("params.") + key + " must be finite");
    return v;
}

SpaceForm parse_space(const ojson& request) {
    if (!request.contains("space") || !request["space"].is_object())
        throw SchemaError("request needs a \"space\" object");
    const ojson& sp = request["space"];
    if (!sp.contains("kind") || !sp["kind"].is_string())
        throw SchemaError("space.kind must be a string");
    std::string kind = sp["kind"].get<std::string>();
    double radius = 1.0;
    if (sp.contains("radius")) {
        if (!sp["radius"].is_number() || !(sp["radius"].get<double>() > 0))
            throw SchemaError("space.radius must be a positive number");
        radius = sp["radius"].get<double>();
    }
    double tol = 1e-9;
    if (const char* env = std::getenv("CURVATURA_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) tol = v;
    }
    if (kind == "spherical") return SpaceForm::spherical(radius, tol);
    if (kind == "euclidean") return SpaceForm::euclidean(tol);
    if (kind == "hyperbolic") return SpaceForm::hyperbolic(radius, tol);
    throw SchemaError("space.kind must be spherical, euclidean or hyperbolic");
}

ojson triangle_result(const SpaceForm& s, const Triangle& t) {
    ojson result;
    result["a"] = num(t.a);
    result["b"] = num(t.b);
    result["c"] = num(t.c);
    result["angles"] = ojson{{"A", num(t.A)}, {"B", num(t.B)}, {"C", num(t.C)}};
    result["angle_sum"] = num(t.angle_sum());
    if (s.kind == Kind::Euclidean) {
        // Heron: Euclidean area comes from the sides, never from the angles.
        double sp = (t.a + t.b + t.c) / 2;
        result["area"] = num(std::sqrt(sp * (sp - t.a) * (sp - t.b) * (sp - t.c)));
    } else {
        result["area"] = num(area_from_angles(s, t.A, t.B, t.C));
    }
    return result;
}

ojson run_task(const SpaceForm& s, const std::string& task, const ojson& params) {
    if (task == "triangle-sss") {
        Triangle t = triangle_from_sss(s, require_number(params, "a"), require_number(params, "b"),
                                       require_number(params, "c"));
        return triangle_result(s, t);
    }
    if (task == "triangle-sas") {
        Triangle t = triangle_from_sas(s, require_number(params, "b"), require_number(params, "c"),
                                       require_number(params, "A"));
        return triangle_result(s, t);
    }
    if (task == "lambert-quad") {
        LambertQuad q =
            lambert_quadrilateral(s, require_number(params, "a"), require_number(params, "b"));
        return ojson{{"a", num(q.a)}, {"b", num(q.b)}, {"c", num(q.c)},
                     {"d", num(q.d)}, {"phi", num(q.phi)}};
    }
    if (task == "saccheri") {
        SaccheriQuad q =
            saccheri_quadrilateral(s, require_number(params, "base"), require_number(params, "leg"));
        return ojson{{"base", num(q.base)},
                     {"leg", num(q.leg)},
                     {"summit", num(q.summit)},
                     {"summit_angle", num(q.summit_angle)}};
    }
    if (task == "profile") {
        double h0 = require_number(params, "h0");
        std::vector<double> ts;
        if (params.contains("t")) {
            if (!params["t"].is_array() || params["t"].empty())
                throw SchemaError("params.t must be a non-empty array of lengths");
            for (const ojson& v : params["t"]) {
                if (!v.is_number()) throw SchemaError("params.t entries must be numbers");
                ts.push_back(v.get<double>());
            }
        } else {
            // default: doubling grid, capped inside the spherical quarter turn
            int count = 6;
            if (params.contains("count")) {
                if (!params["count"].is_number_integer() || params["count"].get<int>() < 1)
                    throw SchemaError("params.count must be a positive integer");
                count = params["count"].get<int>();
            }
            double t0 = h0 / 2;
            if (s.kind == Kind::Spherical) {
                double tmax = kPi * s.radius / 2;
                while (t0 * std::pow(2.0, count - 1) > tmax) t0 /= 2;
            }
            ts = geometric_grid(t0, count);
        }
        PerpProfile prof = perpendicular_profile(s, h0, ts);
        ojson samples = ojson::array();
        for (const ProfileSample& smp : prof.samples)
            samples.push_back(ojson{{"t", num(smp.t)}, {"h", num(smp.h)}, {"phi", num(smp.phi)}});
        return ojson{{"h0", num(prof.h0)}, {"samples", samples}};
    }
    if (task == "parallelism-angle") {
        double p = require_number(params, "p");
        double angle = angle_of_parallelism(s, p);
        ojson result{{"p", num(p)}, {"angle", num(angle)}};
        if (s.kind == Kind::Euclidean)
            result["note"] = "parallel axiom holds: the angle equals pi/2 for every p";
        return result;
    }
    if (task == "canonical-unit") {
        double alpha;
        if (params.contains("angle_deg_min_sec")) {
            const ojson& dms = params["angle_deg_min_sec"];
            if (!dms.is_array() || dms.size() != 3 || !dms[0].is_number() ||
                !dms[1].is_number() || !dms[2].is_number())
                throw SchemaError("params.angle_deg_min_sec must be [deg, min, sec]");
            alpha = (dms[0].get<double>() * 3600 + dms[1].get<double>() * 60 +
                     dms[2].get<double>()) /
                    3600.0 * kPi / 180.0;
        } else {
            alpha = require_number(params, "angle");
        }
        double side = equilateral_side_for_angle(s, alpha);
        return ojson{{"angle", num(alpha)}, {"side", num(side)}};
    }
    if (task == "chain") {
        double seg = require_number(params, "s");
        double theta = require_number(params, "theta");
        if (!params.contains("n") || !params["n"].is_number_integer())
            throw SchemaError("params.n must be an integer");
        int n = params["n"].get<int>();
        PolygonChain chain = build_chain(s, seg, theta, n);
        ojson verts = ojson::array();
        for (const Point& v : chain.vertices) verts.push_back(point_json(s, v));
        ojson center;
        ChainCenter cc = classify_chain_center(chain);
        if (const auto* circ = std::get_if<ChainCircle>(&cc)) {
            center = ojson{{"type", "circle"},
                           {"center", point_json(s, circ->center)},
                           {"radius", num(circ->radius)}};
        } else if (const auto* eq = std::get_if<ChainEquidistant>(&cc)) {
            center = ojson{{"type", "equidistant"},
                           {"axis",
                            ojson{{"base", point_json(s, eq->axis.base)},
                                  {"foot_distance",
                                   num(foot_of_perpendicular(s, chain.vertices[0], eq->axis).h)}}}};
        } else {
            center = ojson{{"type", "horocycle"}};
        }
        bool closed = distance(s, chain.vertices.front(), chain.vertices.back()) < 1e-9 * s.radius;
        return ojson{{"s", num(seg)},      {"theta", num(theta)}, {"n", n},
                     {"vertices", verts},  {"center", center},    {"closed", closed}};
    }
    throw SchemaError("unknown task: " + task);
}

}  // namespace

ojson solve_request(const ojson& request) {
    if (!request.is_object()) throw SchemaError("request must be a JSON object");
    SpaceForm space = parse_space(request);
    if (!request.contains("task") || !request["task"].is_string())
        throw SchemaError("request needs a \"task\" string");
    ojson params = request.contains("params") ? request["params"] : ojson::object();
    if (!params.is_object()) throw SchemaError("params must be an object");

    try {
        ojson result = run_task(space, request["task"].get<std::string>(), params);
        return ojson{{"ok", true}, {"result", result}};
    } catch (const SchemaError&) {
        throw;  // malformed input is a usage error, not a response
    } catch (const NoFourthVertex& e) {
        std::string shape = std::holds_alternative<LinesAsymptotic>(e.closing)
                                ? "asymptotic"
                                : "ultraparallel";
        return ojson{{"ok", false},
                     {"error", ojson{{"code", e.code()},
                                     {"detail", std::string(e.what()) + " [closing pair " +
                                                    shape + "]"}}}};
    } catch (const Error& e) {
        return ojson{{"ok", false}, {"error", ojson{{"code", e.code()}, {"detail", e.what()}}}};
    }
}

std::string solve_request_text(const std::string& request_text) {
    ojson request = ojson::parse(request_text, nullptr, false);
    if (request.is_discarded()) throw SchemaError("request is not valid JSON");
    return solve_request(request).dump(2) + "\n";
}

}  // namespace curvatura
