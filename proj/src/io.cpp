#include "equichar/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "equichar/error.hpp"

namespace equichar {

using nlohmann::json;

namespace {

json parse_document(const std::string& text, const char* what) {
    try {
        json doc = json::parse(text);
        if (!doc.is_object()) throw InputError(std::string(what) + ": top level must be an object");
        return doc;
    } catch (const json::parse_error& e) {
        throw InputError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

// Vertex names may be written as numbers.
std::string name_of(const json& v, const char* what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw InputError(std::string(what) + ": vertex names must be strings or integers");
}

std::vector<std::string> names_of(const json& arr, const char* what) {
    if (!arr.is_array()) throw InputError(std::string(what) + ": expected an array of vertex names");
    std::vector<std::string> out;
    for (const auto& v : arr) out.push_back(name_of(v, what));
    return out;
}

void check_keys(const json& doc, const std::set<std::string>& allowed, const char* what) {
    for (const auto& [key, value] : doc.items())
        if (!allowed.count(key)) throw InputError(std::string(what) + ": unknown field \"" + key + "\"");
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ComplexFile parse_complex_json(const std::string& text) {
    const json doc = parse_document(text, "complex file");
    check_keys(doc, {"name", "vertices", "maximal_simplices", "graph_edges", "flag", "comment"}, "complex file");
    ComplexFile out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InputError("complex file: \"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("vertices")) throw InputError("complex file: missing \"vertices\"");
    std::vector<std::string> vertices = names_of(doc["vertices"], "complex file");
    if (std::set<std::string>(vertices.begin(), vertices.end()).size() != vertices.size())
        throw InputError("complex file: duplicate vertex names");

    const bool has_facets = doc.contains("maximal_simplices");
    const bool has_edges = doc.contains("graph_edges");
    if (doc.contains("flag")) {
        if (!doc["flag"].is_boolean()) throw InputError("complex file: \"flag\" must be a boolean");
        out.flag_mode = doc["flag"].get<bool>();
    }
    if (out.flag_mode) {
        if (has_facets) throw InputError("complex file: flag mode forbids \"maximal_simplices\"");
        if (!has_edges) throw InputError("complex file: flag mode needs \"graph_edges\"");
        std::vector<std::pair<std::string, std::string>> edges;
        if (!doc["graph_edges"].is_array()) throw InputError("complex file: \"graph_edges\" must be an array");
        for (const auto& e : doc["graph_edges"]) {
            auto ends = names_of(e, "complex file");
            if (ends.size() != 2) throw InputError("complex file: every graph edge needs two endpoints");
            edges.emplace_back(ends[0], ends[1]);
        }
        out.complex = flag_complex_from_graph(std::move(vertices), edges);
    } else {
        if (has_edges) throw InputError("complex file: \"graph_edges\" requires \"flag\": true");
        std::vector<std::vector<std::string>> facets;
        if (has_facets) {
            if (!doc["maximal_simplices"].is_array())
                throw InputError("complex file: \"maximal_simplices\" must be an array");
            for (const auto& f : doc["maximal_simplices"]) {
                facets.push_back(names_of(f, "complex file"));
                if (facets.back().empty()) throw InputError("complex file: empty maximal simplex");
            }
        }
        out.complex = SimplicialComplex::from_maximal_simplices(std::move(vertices), facets);
    }
    return out;
}

ComplexFile load_complex_file(const std::string& path) {
    try {
        return parse_complex_json(read_text_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string complex_to_json(const std::string& name, const SimplicialComplex& x) {
    nlohmann::ordered_json doc;
    doc["name"] = name;
    doc["vertices"] = x.vertices();
    auto facets = nlohmann::ordered_json::array();
    for (const auto& f : x.facets()) facets.push_back(x.names(f));
    doc["maximal_simplices"] = std::move(facets);
    return doc.dump(2);
}

GroupFile parse_group_json(const std::string& text) {
    const json doc = parse_document(text, "group file");
    check_keys(doc, {"name", "p", "points", "generators", "comment"}, "group file");
    GroupFile out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InputError("group file: \"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (doc.contains("p")) {
        if (!doc["p"].is_number_integer()) throw InputError("group file: \"p\" must be an integer");
        out.p = doc["p"].get<std::int64_t>();
        if (!is_prime(*out.p)) throw InputError("group file: p = " + std::to_string(*out.p) + " is not prime");
    }
    if (doc.contains("points")) out.points = names_of(doc["points"], "group file");
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw InputError("group file: missing \"generators\" array");
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) throw InputError("group file: generators must be cycle-notation strings");
        out.generators.push_back(g.get<std::string>());
    }
    return out;
}

GroupFile load_group_file(const std::string& path) {
    try {
        return parse_group_json(read_text_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<std::string> points_in_cycles(const std::vector<std::string>& cycles) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& text : cycles) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            const char c = text[pos];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',') {
                ++pos;
                continue;
            }
            const std::size_t start = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' &&
                   text[pos] != ')' && text[pos] != ',')
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (seen.insert(name).second) out.push_back(std::move(name));
        }
    }
    return out;
}

namespace {

FiniteGroup group_on(const GroupFile& g, std::vector<std::string> points) {
    std::vector<Permutation> gens;
    for (const auto& c : g.generators) gens.push_back(parse_cycles(c, points));
    FiniteGroup out = FiniteGroup::from_generators(std::move(points), std::move(gens));
    if (g.p && out.order() > 1 && !exact_log(out.order(), *g.p))
        throw PreconditionError("group " + (g.name.empty() ? std::string("from file") : "'" + g.name + "'") +
                                " has order " + std::to_string(out.order()) + ", not a power of the declared p = " +
                                std::to_string(*g.p));
    return out;
}

} // namespace

FiniteGroup build_group(const GroupFile& g) {
    return group_on(g, g.points ? *g.points : points_in_cycles(g.generators));
}

GroupAction build_action(const ComplexFile& x, const GroupFile& g) {
    if (g.points)
        for (const auto& p : *g.points)
            if (!x.complex.vertex_id(p))
                throw InputError("group point '" + p + "' is not a vertex of the complex");
    return GroupAction::of_permutation_group(x.complex, group_on(g, x.complex.vertices()));
}

} // namespace equichar
