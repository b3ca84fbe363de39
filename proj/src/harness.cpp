#include "topodeck/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "topodeck/compactification.hpp"
#include "topodeck/smooth.hpp"
#include "topodeck/surgery.hpp"

namespace topodeck {

namespace {

// Labeled multigraph under construction: a non-decreasing list of edges
// (u, v), u <= v, where fresh vertices are introduced in numeric order. Any
// multigraph admits such a labeling (relabel along a greedy smallest-edge
// traversal), so the walk below reaches every isomorphism class; duplicates
// are removed afterwards by certificate.
struct PartWalk {
    unsigned max_edges;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;
    std::vector<TopoGraph> out;

    void emit() {
        // Only smoothed forms enter the universe; a degree-2 vertex here is
        // just an unfinished interior point.
        for (int d : degree)
            if (d == 2) return;
        TopoGraph g;
        for (std::size_t v = 0; v < degree.size(); ++v)
            g.vertices.push_back(std::to_string(v));
        for (std::size_t i = 0; i < edges.size(); ++i)
            g.edges.push_back(Edge{"e" + std::to_string(i),
                                   {EndSlot::attached(std::to_string(edges[i].first)),
                                    EndSlot::attached(std::to_string(edges[i].second))}});
        out.push_back(std::move(g));
    }

    void add(int u, int v) {
        while (degree.size() <= static_cast<std::size_t>(v)) degree.push_back(0);
        degree[u] += 1;
        degree[v] += 1;
        edges.emplace_back(u, v);
    }

    void pop() {
        auto [u, v] = edges.back();
        edges.pop_back();
        degree[u] -= 1;
        degree[v] -= 1;
        while (!degree.empty() && degree.back() == 0) degree.pop_back();
    }

    void walk(std::pair<int, int> last) {
        emit();
        if (edges.size() == max_edges) return;
        // Each further edge repairs at most two degree-2 vertices.
        std::size_t deg2 = 0;
        for (int d : degree) deg2 += d == 2;
        if (deg2 > 2 * (max_edges - edges.size())) return;
        int nf = static_cast<int>(degree.size());
        auto consider = [&](int u, int v) {
            if (std::pair(u, v) < last) return;
            // Vertices below u never gain another slot: every later edge
            // (u', v') >= (u, v) has both endpoints >= u. A finalized
            // degree-2 vertex can no longer be repaired, so prune.
            for (int w = 0; w < u; ++w)
                if (degree[w] == 2) return;
            add(u, v);
            walk({u, v});
            pop();
        };
        for (int u = 0; u < nf; ++u)
            for (int v = u; v < nf; ++v) consider(u, v);
        for (int u = 0; u < nf; ++u) consider(u, nf);  // one fresh endpoint
        consider(nf, nf);                              // fresh loop
        consider(nf, nf + 1);                          // fresh disjoint edge
    }
};

std::size_t count_components(const TopoGraph& g) { return components(g).size(); }

}  // namespace

std::vector<CanonicalForm> enumerate_canonical(const EnumerationBudget& budget) {
    if (budget.max_edges < 1)
        throw std::invalid_argument("enumerate_canonical: budget requires max_edges >= 1");
    if (budget.min_points < 3)
        throw std::invalid_argument("enumerate_canonical: budget requires min_points >= 3");

    PartWalk walk{budget.max_edges, {}, {}, {}};
    walk.walk({-1, -1});

    // Distinct edge parts, up to isomorphism.
    std::map<std::string, TopoGraph> parts;
    for (const TopoGraph& raw : walk.out) {
        CanonicalForm cf = canon(raw);
        parts.emplace(std::move(cf.certificate), std::move(cf.graph));
    }

    // Attach circle components and isolated vertices, each up to the
    // secondary budget, then filter.
    std::map<std::string, TopoGraph> universe;
    for (const auto& [cert, part] : parts) {
        for (unsigned c = 0; c <= budget.max_edges; ++c) {
            for (unsigned iso = 0; iso <= budget.max_edges; ++iso) {
                TopoGraph g = part;
                g.circles = c;
                for (const std::string& id : fresh_ids(part, "p", iso))
                    g.vertices.push_back(id);
                if (!has_at_least_points(g, budget.min_points)) continue;
                if (budget.connected_only && count_components(g) != 1) continue;
                CanonicalForm cf = canon(g);
                universe.emplace(std::move(cf.certificate), std::move(cf.graph));
            }
        }
    }

    std::vector<CanonicalForm> out;
    out.reserve(universe.size());
    for (auto& [cert, graph] : universe) out.push_back(CanonicalForm{std::move(graph), cert});
    return out;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

constexpr const char* kCacheHeader = "topodeck-cache v1";

std::string join_tab(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += '\t';
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split_tab(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

}  // namespace

DeckCache DeckCache::load(const std::string& path) {
    DeckCache cache;
    std::ifstream in(path, std::ios::binary);
    if (!in) return cache;

    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader) {
        // Unknown version or garbage: regenerate everything.
        cache.corrupt_ += 1;
        return cache;
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_tab(line);
        if (fields.size() < 3) {
            cache.corrupt_ += 1;
            continue;
        }
        std::vector<std::string> cards(fields.begin() + 2, fields.end());
        if (fnv1a64_hex(join_tab(cards)) != fields[1]) {
            cache.corrupt_ += 1;  // checksum mismatch: drop, caller regenerates
            continue;
        }
        cache.entries_[fields[0]] = std::move(cards);
    }
    return cache;
}

const std::vector<std::string>* DeckCache::lookup(const std::string& graph_cert) const {
    auto it = entries_.find(graph_cert);
    return it == entries_.end() ? nullptr : &it->second;
}

void DeckCache::store(const std::string& graph_cert, std::vector<std::string> cards) {
    entries_[graph_cert] = std::move(cards);
}

void DeckCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << kCacheHeader << '\n';
    for (const auto& [cert, cards] : entries_) {
        std::string payload = join_tab(cards);
        out << cert << '\t' << fnv1a64_hex(payload) << '\t' << payload << '\n';
    }
}

InjectivityReport verify_deck_injectivity(const EnumerationBudget& budget, DeckCache* cache) {
    InjectivityReport report;
    report.budget = budget;
    report.every_graph_has_finitely_compactifiable_card = true;

    std::vector<CanonicalForm> universe = enumerate_canonical(budget);
    report.universe_size = universe.size();

    for (const CanonicalForm& cf : universe) {
        std::vector<std::string> cards;
        if (const auto* hit = cache ? cache->lookup(cf.certificate) : nullptr) {
            cards = *hit;
        } else {
            Deck d = deck(cf.graph);
            cards.assign(d.cards.begin(), d.cards.end());
            if (cache) cache->store(cf.certificate, cards);
        }

        std::string key;
        for (const std::string& c : cards) key += c + '\n';
        report.deck_groups[key].push_back(cf.certificate);

        auto classes = point_classes(cf.graph);
        if (classes.empty()) report.every_graph_has_finitely_compactifiable_card = false;
        unsigned min_e = 0;
        bool first = true;
        for (const PointClass& p : classes) {
            EStarValue e = estar(cf.graph, p);
            if (e.infinite) report.every_graph_has_finitely_compactifiable_card = false;
            if (first || e.value < min_e) min_e = e.value;
            first = false;
            // Thm hypothesis: the card admits a maximal finite
            // compactification, whose remainder size max_nstar reports.
            (void)max_nstar(remove_point(cf.graph, p));
        }
        report.min_estar[cf.certificate] = min_e;
    }

    for (const auto& [key, graphs] : report.deck_groups) {
        if (graphs.size() >= 2)
            report.collisions.push_back({fnv1a64_hex(key), graphs});
    }
    return report;
}

std::string render_report_text(const InjectivityReport& report) {
    std::ostringstream out;
    out << "budget: max_edges=" << report.budget.max_edges
        << " connected_only=" << (report.budget.connected_only ? "true" : "false")
        << " min_points=" << report.budget.min_points << '\n';
    out << "universe_size: " << report.universe_size << '\n';
    out << "collisions: " << report.collisions.size() << '\n';
    for (const auto& col : report.collisions) {
        out << "  deck " << col.deck_hash << ":\n";
        for (const auto& g : col.graphs) out << "    " << g << '\n';
    }
    out << "min_estar:\n";
    for (const auto& [cert, value] : report.min_estar)
        out << "  " << cert << " " << value << '\n';
    return out.str();
}

nlohmann::json report_to_json(const InjectivityReport& report) {
    nlohmann::json j;
    j["budget"] = {{"max_edges", report.budget.max_edges},
                   {"connected_only", report.budget.connected_only},
                   {"min_points", report.budget.min_points}};
    j["universe_size"] = report.universe_size;
    j["collisions"] = nlohmann::json::array();
    for (const auto& col : report.collisions)
        j["collisions"].push_back({{"deck_hash", col.deck_hash}, {"graphs", col.graphs}});
    j["min_estar"] = report.min_estar;
    return j;
}

InjectivityReport report_from_json(const nlohmann::json& j) {
    InjectivityReport report;
    report.budget.max_edges = j.at("budget").at("max_edges").get<unsigned>();
    report.budget.connected_only = j.at("budget").at("connected_only").get<bool>();
    report.budget.min_points = j.at("budget").at("min_points").get<unsigned>();
    report.universe_size = j.at("universe_size").get<std::size_t>();
    for (const auto& col : j.at("collisions")) {
        InjectivityReport::Collision c;
        c.deck_hash = col.at("deck_hash").get<std::string>();
        c.graphs = col.at("graphs").get<std::vector<std::string>>();
        report.collisions.push_back(std::move(c));
    }
    report.min_estar = j.at("min_estar").get<std::map<std::string, unsigned>>();
    return report;
}

}  // namespace topodeck
