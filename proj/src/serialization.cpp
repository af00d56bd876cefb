#include "valconv/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace valconv {

namespace {

std::vector<double> number_list(const Json& j, const char* what) {
    if (!j.is_array())
        throw std::runtime_error(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number())
            throw std::runtime_error(std::string(what) + " must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

Json body_to_json(const ConvexBody& body) {
    Json j;
    if (body.is_interval()) {
        const Interval& iv = body.as_interval();
        j["kind"] = "interval";
        j["lo"] = iv.lo;
        j["hi"] = iv.hi;
    } else if (body.is_polygon()) {
        j["kind"] = "polygon";
        Json verts = Json::array();
        for (const Vec2& v : body.as_polygon().vertices)
            verts.push_back(Json::array({v.x, v.y}));
        j["vertices"] = std::move(verts);
    } else {
        const SupportSampled& s = body.as_sampled();
        j["kind"] = "support";
        j["dim"] = s.dim;
        Json dirs = Json::array();
        for (const auto& d : s.directions)
            dirs.push_back(d);
        j["directions"] = std::move(dirs);
        j["values"] = s.values;
    }
    return j;
}

ConvexBody body_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::runtime_error("body needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "interval")
        return ConvexBody::interval(j.at("lo").get<double>(), j.at("hi").get<double>());
    if (kind == "polygon") {
        std::vector<Vec2> verts;
        for (const Json& row : j.at("vertices")) {
            std::vector<double> p = number_list(row, "polygon vertex");
            if (p.size() != 2)
                throw std::runtime_error("polygon vertices need two coordinates");
            verts.push_back({p[0], p[1]});
        }
        return ConvexBody::polygon(verts);
    }
    if (kind == "support") {
        int dim = j.at("dim").get<int>();
        std::vector<std::vector<double>> dirs;
        for (const Json& row : j.at("directions"))
            dirs.push_back(number_list(row, "support direction"));
        return ConvexBody::support_sampled(dim, dirs, number_list(j.at("values"), "support values"));
    }
    throw std::runtime_error("unknown body kind: " + kind);
}

Json measure_to_json(const Measure& mu) {
    Json j;
    j["dim"] = mu.dim;
    Json atoms = Json::array();
    for (const Atom& a : mu.atoms)
        atoms.push_back(Json::array({Json(a.point), Json(a.weight)}));
    j["atoms"] = std::move(atoms);
    if (mu.density) {
        const GridDensity& g = *mu.density;
        j["grid"] = Json{{"origin", g.origin},
                         {"spacing", g.spacing},
                         {"shape", g.shape},
                         {"values", g.values}};
    }
    return j;
}

Measure measure_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim"))
        throw std::runtime_error("measure needs a \"dim\" field");
    int dim = j.at("dim").get<int>();
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        for (const Json& row : j.at("atoms")) {
            if (!row.is_array() || row.size() != 2)
                throw std::runtime_error("measure atoms must be [point, weight] pairs");
            atoms.push_back({number_list(row.at(0), "atom point"), row.at(1).get<double>()});
        }
    }
    std::optional<GridDensity> density;
    if (j.contains("grid") && !j.at("grid").is_null()) {
        const Json& g = j.at("grid");
        GridDensity d;
        d.origin = number_list(g.at("origin"), "grid origin");
        d.spacing = g.at("spacing").get<double>();
        d.shape = g.at("shape").get<std::vector<int>>();
        d.values = number_list(g.at("values"), "grid values");
        density = std::move(d);
    }
    return make_measure(dim, std::move(atoms), std::move(density));
}

Json valuation_to_json(const SmoothValuation& psi) {
    Json terms = Json::array();
    for (const ValuationTerm& t : psi.terms)
        terms.push_back(Json{{"coeff", t.coeff},
                             {"measure", measure_to_json(t.measure)},
                             {"body", body_to_json(t.body)}});
    return Json{{"dim", psi.dim}, {"terms", std::move(terms)}};
}

SmoothValuation valuation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
        throw std::runtime_error("valuation needs \"dim\" and \"terms\" fields");
    int dim = j.at("dim").get<int>();
    std::vector<ValuationTerm> terms;
    for (const Json& row : j.at("terms")) {
        if (row.at("measure").is_string() || row.at("body").is_string())
            throw std::runtime_error("name references are only valid inside a scene");
        terms.push_back({row.at("coeff").get<double>(), measure_from_json(row.at("measure")),
                         body_from_json(row.at("body"))});
    }
    return make_valuation(dim, std::move(terms));
}

Json pair_to_json(const Pair1D& p) {
    return Json{{"origin", p.origin},
                {"spacing", p.spacing},
                {"f", p.f},
                {"g", p.g},
                {"right_constant", p.right_constant}};
}

Pair1D pair_from_json(const Json& j) {
    return make_pair1d(j.at("origin").get<double>(), j.at("spacing").get<double>(),
                       number_list(j.at("f"), "pair f"), number_list(j.at("g"), "pair g"),
                       j.at("right_constant").get<double>());
}

Json scene_to_json(const Scene& scene) {
    Json bodies = Json::object();
    for (const auto& [name, body] : scene.bodies)
        bodies[name] = body_to_json(body);
    Json measures = Json::object();
    for (const auto& [name, mu] : scene.measures)
        measures[name] = measure_to_json(mu);
    Json valuations = Json::object();
    for (const auto& [name, psi] : scene.valuations)
        valuations[name] = valuation_to_json(psi);
    return Json{{"bodies", std::move(bodies)},
                {"measures", std::move(measures)},
                {"valuations", std::move(valuations)},
                {"probes", scene.probes}};
}

Scene scene_from_json(const Json& j) {
    if (!j.is_object())
        throw std::runtime_error("scene must be a JSON object");
    Scene scene;
    if (j.contains("bodies"))
        for (const auto& [name, body] : j.at("bodies").items())
            scene.bodies.emplace(name, body_from_json(body));
    if (j.contains("measures"))
        for (const auto& [name, mu] : j.at("measures").items())
            scene.measures.emplace(name, measure_from_json(mu));
    if (j.contains("valuations")) {
        for (const auto& [name, val] : j.at("valuations").items()) {
            int dim = val.at("dim").get<int>();
            std::vector<ValuationTerm> terms;
            for (const Json& row : val.at("terms")) {
                Measure mu;
                if (row.at("measure").is_string()) {
                    std::string ref = row.at("measure").get<std::string>();
                    auto it = scene.measures.find(ref);
                    if (it == scene.measures.end())
                        throw std::runtime_error("unknown measure reference: " + ref);
                    mu = it->second;
                } else {
                    mu = measure_from_json(row.at("measure"));
                }
                ConvexBody body;
                if (row.at("body").is_string()) {
                    std::string ref = row.at("body").get<std::string>();
                    auto it = scene.bodies.find(ref);
                    if (it == scene.bodies.end())
                        throw std::runtime_error("unknown body reference: " + ref);
                    body = it->second;
                } else {
                    body = body_from_json(row.at("body"));
                }
                terms.push_back({row.at("coeff").get<double>(), std::move(mu), std::move(body)});
            }
            scene.valuations.emplace(name, make_valuation(dim, std::move(terms)));
        }
    }
    if (j.contains("probes")) {
        for (const Json& p : j.at("probes")) {
            std::string name = p.get<std::string>();
            if (scene.bodies.find(name) == scene.bodies.end())
                throw std::runtime_error("probe names an unknown body: " + name);
            scene.probes.push_back(std::move(name));
        }
    }
    return scene;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open scene file: " + path);
    Json j = Json::parse(in);
    return scene_from_json(j);
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace valconv
