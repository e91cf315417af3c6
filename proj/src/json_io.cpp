#include "sset/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sset/errors.hpp"

namespace sset {

namespace {

Json expr_spec_to_json(const ExprSpec& e) {
    return Json{{"collapse", e.collapse}, {"target", e.target}};
}

ExprSpec expr_spec_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("collapse") || !j.contains("target"))
        throw ParseError(where + ": expression must be {\"collapse\": [...], \"target\": str}");
    ExprSpec out;
    if (!j["target"].is_string()) throw ParseError(where + ": \"target\" must be a string");
    out.target = j["target"].get<std::string>();
    if (!j["collapse"].is_array()) throw ParseError(where + ": \"collapse\" must be an array");
    for (const auto& c : j["collapse"]) {
        if (!c.is_number_integer()) throw ParseError(where + ": collapse entries must be integers");
        out.collapse.push_back(c.get<int>());
    }
    return out;
}

}  // namespace

Json sset_to_json(const SimplicialSet& X) {
    Json arr = Json::array();
    for (const auto& s : X.simplices()) {
        Json faces = Json::array();
        for (const auto& f : s.faces) faces.push_back(expr_spec_to_json(X.expr_to_spec(f)));
        arr.push_back(Json{{"id", s.id}, {"dim", s.dim}, {"faces", faces}});
    }
    return Json{{"name", X.name()}, {"simplices", arr}};
}

SSetPtr sset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("simplices"))
        throw ParseError("simplicial set must be {\"name\": str, \"simplices\": [...]}");
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    if (!j["simplices"].is_array()) throw ParseError("\"simplices\" must be an array");
    std::vector<SimplexSpec> spec;
    for (const auto& js : j["simplices"]) {
        if (!js.is_object() || !js.contains("id") || !js.contains("dim") || !js.contains("faces"))
            throw ParseError("simplex must be {\"id\": str, \"dim\": int, \"faces\": [...]}");
        SimplexSpec s;
        if (!js["id"].is_string()) throw ParseError("simplex \"id\" must be a string");
        s.id = js["id"].get<std::string>();
        if (!js["dim"].is_number_integer())
            throw ParseError("simplex '" + s.id + "': \"dim\" must be an integer");
        s.dim = js["dim"].get<int>();
        if (!js["faces"].is_array())
            throw ParseError("simplex '" + s.id + "': \"faces\" must be an array");
        for (const auto& jf : js["faces"])
            s.faces.push_back(expr_spec_from_json(jf, "simplex '" + s.id + "'"));
        spec.push_back(std::move(s));
    }
    try {
        return make_sset(j["name"].get<std::string>(), std::move(spec));
    } catch (const MalformedError& e) {
        throw ParseError(e.what());
    }
}

Json map_to_json(const SimplicialMap& f) {
    Json assign = Json::object();
    const SimplicialSet& dom = *f.domain();
    const SimplicialSet& cod = *f.codomain();
    for (int i = 0; i < dom.size(); ++i)
        assign[dom.simplex(i).id] = expr_spec_to_json(cod.expr_to_spec(f.assignment(i)));
    return Json{{"domain", dom.name()}, {"codomain", cod.name()}, {"assignments", assign}};
}

SimplicialMap map_from_json(const Json& j, const SSetPtr& domain, const SSetPtr& codomain) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
        !j.contains("assignments"))
        throw ParseError("map must be {\"domain\": str, \"codomain\": str, \"assignments\": {...}}");
    if (!j["assignments"].is_object()) throw ParseError("\"assignments\" must be an object");
    if (j["domain"].get<std::string>() != domain->name())
        throw ParseError("map domain '" + j["domain"].get<std::string>() +
                         "' does not match provided set '" + domain->name() + "'");
    if (j["codomain"].get<std::string>() != codomain->name())
        throw ParseError("map codomain '" + j["codomain"].get<std::string>() +
                         "' does not match provided set '" + codomain->name() + "'");
    std::map<std::string, ExprSpec> assignments;
    for (const auto& [id, je] : j["assignments"].items())
        assignments[id] = expr_spec_from_json(je, "assignment of '" + id + "'");
    try {
        return SimplicialMap{domain, codomain, assignments};
    } catch (const MalformedError& e) {
        throw ParseError(e.what());
    }
}

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

SSetPtr load_sset(const std::string& path) { return sset_from_json(load_json(path)); }

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << canonical_dump(j);
}

Json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("parse failure in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace sset
