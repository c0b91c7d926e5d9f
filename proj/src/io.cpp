#include "cers/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cers {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> vertex_labels(const ResonanceGraph& r, const CodedMatchingMap* map) {
    std::vector<std::string> labels(r.vertices.size());
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        int at = map ? map->index_of_matching(r.vertices[i]) : -1;
        labels[i] = at >= 0 ? map->code_set.codes[at] : std::to_string(i);
    }
    return labels;
}

}  // namespace

CersSpec parse_spec(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("root") || !doc.contains("faces"))
        throw ParseError("spec must be an object with \"root\" and \"faces\"");
    if (!doc["root"].is_string() || !doc["faces"].is_array())
        throw ParseError("\"root\" must be a string and \"faces\" an array");

    CersSpec spec;
    spec.root = doc["root"].get<std::string>();
    for (const auto& face : doc["faces"]) {
        if (!face.is_object() || !face.contains("id") || !face.contains("length") ||
            !face["id"].is_string() || !face["length"].is_number_integer())
            throw ParseError("every face needs a string \"id\" and an integer \"length\"");
        FaceSpec fs;
        fs.id = face["id"].get<std::string>();
        fs.length = face["length"].get<int>();
        if (face.contains("attachments")) {
            if (!face["attachments"].is_array())
                throw ParseError("\"attachments\" must be an array");
            for (const auto& att : face["attachments"]) {
                if (!att.is_object() || !att.contains("neighbor") || !att.contains("position") ||
                    !att["neighbor"].is_string() || !att["position"].is_number_integer())
                    throw ParseError(
                        "every attachment needs a string \"neighbor\" and an integer "
                        "\"position\"");
                fs.attachments.push_back(
                    {att["neighbor"].get<std::string>(), att["position"].get<int>()});
            }
        }
        spec.faces.push_back(std::move(fs));
    }
    return spec;
}

CersSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

std::string spec_to_json(const CersSpec& spec, bool canonical) {
    ordered_json doc;
    if (canonical) doc["canonical"] = true;
    doc["root"] = spec.root;
    doc["faces"] = ordered_json::array();
    for (const auto& face : spec.faces) {
        ordered_json f;
        f["id"] = face.id;
        f["length"] = face.length;
        f["attachments"] = ordered_json::array();
        for (const auto& att : face.attachments)
            f["attachments"].push_back({{"neighbor", att.neighbor}, {"position", att.position}});
        doc["faces"].push_back(std::move(f));
    }
    return doc.dump(2) + "\n";
}

std::string matchings_to_json(const std::vector<Matching>& matchings) {
    ordered_json doc = ordered_json::array();
    for (const auto& m : matchings) doc.push_back(m.edge_list());
    return doc.dump() + "\n";
}

std::string matchings_to_text(const std::vector<Matching>& matchings) {
    std::ostringstream out;
    for (const auto& m : matchings) {
        bool first = true;
        for (int e : m.edge_list()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string codes_to_text(const CodeSet& codes) {
    std::ostringstream out;
    for (const auto& c : codes.codes) out << c << '\n';
    return out.str();
}

std::string coding_to_json(const PlaneCers& g, const CodedMatchingMap& map) {
    ordered_json doc;
    doc["root"] = g.faces[map.code_set.ordering.root].id;
    doc["strategy"] = map.code_set.ordering.strategy == OrderStrategy::Bfs ? "bfs" : "dfs";
    doc["ordering"] = ordered_json::array();
    for (int f : map.code_set.ordering.faces) doc["ordering"].push_back(g.faces[f].id);
    doc["codes"] = map.code_set.codes;
    doc["matchings"] = ordered_json::array();
    for (const auto& m : map.matchings) doc["matchings"].push_back(m.edge_list());
    return doc.dump(2) + "\n";
}

std::string resonance_to_dot(const ResonanceGraph& r, const PlaneCers& g,
                             const CodedMatchingMap* map) {
    std::vector<std::string> labels = vertex_labels(r, map);
    std::ostringstream out;
    out << "graph resonance {\n";
    for (std::size_t i = 0; i < r.vertices.size(); ++i)
        out << "  v" << i << " [label=\"" << labels[i] << "\"];\n";
    for (const auto& e : r.edges)
        out << "  v" << e.u << " -- v" << e.v << " [label=\"" << g.faces[e.face].id << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string resonance_to_json(const ResonanceGraph& r, const PlaneCers& g,
                              const CodedMatchingMap* map) {
    std::vector<std::string> labels = vertex_labels(r, map);
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        ordered_json v;
        v["index"] = i;
        v["label"] = labels[i];
        v["matching"] = r.vertices[i].edge_list();
        doc["vertices"].push_back(std::move(v));
    }
    doc["edges"] = ordered_json::array();
    for (const auto& e : r.edges)
        doc["edges"].push_back(
            {{"u", e.u}, {"v", e.v}, {"face", g.faces[e.face].id}});
    return doc.dump(2) + "\n";
}

std::string resonance_to_text(const ResonanceGraph& r, const PlaneCers& g,
                              const CodedMatchingMap* map) {
    std::vector<std::string> labels = vertex_labels(r, map);
    std::ostringstream out;
    for (const auto& e : r.edges)
        out << labels[e.u] << " -- " << labels[e.v] << " [" << g.faces[e.face].id << "]\n";
    return out.str();
}

std::string validation_to_json(const ValidationReport& report) {
    ordered_json doc;
    doc["ok"] = report.ok();
    doc["violations"] = ordered_json::array();
    for (const auto& v : report.violations)
        doc["violations"].push_back({{"face", v.face}, {"rule", v.rule}, {"detail", v.detail}});
    return doc.dump(2) + "\n";
}

}  // namespace cers
