#include "topodeck/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace topodeck {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

TopoGraph parse_graph_text(std::string_view text) {
    TopoGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& dir = tokens[0];
        if (dir == "v" && tokens.size() == 2) {
            g.vertices.push_back(tokens[1]);
        } else if (dir == "e" && tokens.size() == 4) {
            g.edges.push_back(
                Edge{tokens[1], {EndSlot::attached(tokens[2]), EndSlot::attached(tokens[3])}});
        } else if (dir == "h" && tokens.size() == 3) {
            g.edges.push_back(Edge{tokens[1], {EndSlot::attached(tokens[2]), EndSlot::open_end()}});
        } else if (dir == "a" && tokens.size() == 2) {
            g.edges.push_back(Edge{tokens[1], {EndSlot::open_end(), EndSlot::open_end()}});
        } else if (dir == "c" && tokens.size() == 2) {
            try {
                g.circles = std::stoll(tokens[1]);
            } catch (const std::exception&) {
                fail(lineno, "bad circle count '" + tokens[1] + "'");
            }
        } else {
            fail(lineno, "bad directive '" + line + "'");
        }
    }
    return g;
}

std::string emit_graph_text(const TopoGraph& g) {
    std::vector<VertexId> vs = g.vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<const Edge*> es;
    for (const Edge& e : g.edges) es.push_back(&e);
    std::sort(es.begin(), es.end(), [](const Edge* a, const Edge* b) { return a->id < b->id; });

    std::string out;
    for (const VertexId& v : vs) out += "v " + v + "\n";
    for (const Edge* e : es) {
        if (e->is_open_arc())
            out += "a " + e->id + "\n";
        else if (e->is_half_open())
            out += "h " + e->id + " " + *(e->ends[0].open() ? e->ends[1] : e->ends[0]).vertex + "\n";
        else
            out += "e " + e->id + " " + *e->ends[0].vertex + " " + *e->ends[1].vertex + "\n";
    }
    out += "c " + std::to_string(g.circles) + "\n";
    return out;
}

TopoGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("bad JSON: ") + ex.what());
    }
    TopoGraph g;
    try {
        for (const auto& v : j.value("vertices", nlohmann::json::array()))
            g.vertices.push_back(v.get<std::string>());
        for (const auto& e : j.value("edges", nlohmann::json::array())) {
            Edge edge;
            edge.id = e.at("id").get<std::string>();
            const auto& ends = e.at("ends");
            if (!ends.is_array() || ends.size() != 2)
                throw ParseError("edge '" + edge.id + "': ends must be a 2-element array");
            for (int i = 0; i < 2; ++i) {
                if (ends[i].is_string() && ends[i].get<std::string>() == "open")
                    edge.ends[i] = EndSlot::open_end();
                else if (ends[i].is_object() && ends[i].contains("v"))
                    edge.ends[i] = EndSlot::attached(ends[i]["v"].get<std::string>());
                else
                    throw ParseError("edge '" + edge.id + "': bad end slot");
            }
            g.edges.push_back(std::move(edge));
        }
        g.circles = j.value("circles", std::int64_t{0});
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("bad graph JSON: ") + ex.what());
    }
    return g;
}

std::string emit_graph_json(const TopoGraph& g) {
    nlohmann::json j;
    std::vector<VertexId> vs = g.vertices;
    std::sort(vs.begin(), vs.end());
    j["vertices"] = vs;
    std::vector<const Edge*> es;
    for (const Edge& e : g.edges) es.push_back(&e);
    std::sort(es.begin(), es.end(), [](const Edge* a, const Edge* b) { return a->id < b->id; });
    j["edges"] = nlohmann::json::array();
    for (const Edge* e : es) {
        nlohmann::json ends = nlohmann::json::array();
        for (const EndSlot& s : e->ends) {
            if (s.open())
                ends.push_back("open");
            else
                ends.push_back(nlohmann::json{{"v", *s.vertex}});
        }
        j["edges"].push_back(nlohmann::json{{"id", e->id}, {"ends", ends}});
    }
    j["circles"] = g.circles;
    return j.dump(2) + "\n";
}

TopoGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

}  // namespace topodeck
