#include "topodeck/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topodeck/canon.hpp"
#include "topodeck/compactification.hpp"
#include "topodeck/harness.hpp"
#include "topodeck/io.hpp"
#include "topodeck/smooth.hpp"
#include "topodeck/surgery.hpp"

namespace topodeck {

namespace {

PointClass parse_point_arg(const TopoGraph& g, const std::string& s) {
    auto p = PointClass::parse(s);
    if (!p)
        throw std::invalid_argument("bad point class '" + s +
                                    "' (expected vertex:<id>, edge:<id> or circle)");
    if (!point_class_valid(g, *p))
        throw std::invalid_argument("point class '" + s + "' does not exist in the graph");
    return *p;
}

// "--block e1:0,e2:1": comma-separated open slots, each <edge-id>:<end>.
std::vector<SlotRef> parse_block(const std::string& spec) {
    std::vector<SlotRef> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string item = spec.substr(start, comma - start);
        std::size_t colon = item.rfind(':');
        if (colon == std::string::npos || colon + 2 != item.size() ||
            (item[colon + 1] != '0' && item[colon + 1] != '1'))
            throw std::invalid_argument("bad slot '" + item + "' (expected <edge-id>:<0|1>)");
        out.emplace_back(item.substr(0, colon), item[colon + 1] - '0');
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void print_graph(const TopoGraph& g, bool json, std::ostream& out,
                 const std::vector<std::pair<std::string, std::string>>& notes = {}) {
    if (json) {
        out << emit_graph_json(g);
        return;
    }
    for (const auto& [key, value] : notes) out << "# " << key << ": " << value << "\n";
    out << emit_graph_text(g);
}

struct Options {
    std::string input;
    std::string point_p, point_q;
    bool json = false;
    bool cards = false;
    int witness_n = -1;
    std::vector<std::string> blocks;
    std::string compactify_mode;
    unsigned max_edges = 4;
    bool connected = false;
    unsigned min_points = 3;
    std::string cache_dir;
    std::string report_format = "text";
};

int run_canon(const Options& opt, std::ostream& out) {
    CanonicalForm cf = canon(load_graph_file(opt.input));
    if (opt.json)
        out << nlohmann::json{{"certificate", cf.certificate}}.dump(2) << "\n";
    else
        out << cf.certificate << "\n";
    return 0;
}

int run_deck(const Options& opt, std::ostream& out) {
    Deck d = deck(load_graph_file(opt.input));
    if (opt.json) {
        nlohmann::json j;
        j["cards"] = d.cards;
        j["labeled_cards"] = nlohmann::json::object();
        for (const auto& [p, cert] : d.labeled_cards) j["labeled_cards"][p.to_string()] = cert;
        out << j.dump(2) << "\n";
    } else if (opt.cards) {
        for (const auto& [p, cert] : d.labeled_cards)
            out << p.to_string() << " -> " << cert << "\n";
    } else {
        for (const auto& cert : d.cards) out << cert << "\n";
    }
    return 0;
}

int run_estar(const Options& opt, std::ostream& out) {
    TopoGraph g = load_graph_file(opt.input);
    require_valid(g, "estar");
    nlohmann::json j = nlohmann::json::object();
    for (const PointClass& p : point_classes(g)) {
        EStarValue e = estar(g, p);
        if (opt.json)
            j[p.to_string()] = e.infinite ? nlohmann::json("infinity") : nlohmann::json(e.value);
        else
            out << p.to_string() << " " << e.to_string() << "\n";
    }
    if (opt.json) out << j.dump(2) << "\n";
    return 0;
}

int run_ends(const Options& opt, std::ostream& out) {
    unsigned n = end_count(load_graph_file(opt.input));
    if (opt.json)
        out << nlohmann::json{{"ends", n}}.dump(2) << "\n";
    else
        out << n << "\n";
    return 0;
}

int run_nstar(const Options& opt, std::ostream& out) {
    TopoGraph g = load_graph_file(opt.input);
    if (opt.witness_n < 0) {
        unsigned n = max_nstar(g);
        if (opt.json)
            out << nlohmann::json{{"max_nstar", n}}.dump(2) << "\n";
        else
            out << n << "\n";
        return 0;
    }
    NStarWitness w = nstar_witness(g, static_cast<unsigned>(opt.witness_n));
    if (auto reason = validate_nstar(g, w))
        throw std::logic_error("constructed witness failed validation: " + *reason);
    if (opt.json) {
        nlohmann::json j;
        std::vector<EdgeId> core_edges;
        for (const Edge& e : w.core.edges) core_edges.push_back(e.id);
        std::sort(core_edges.begin(), core_edges.end());
        j["core_edges"] = core_edges;
        j["parts"] = nlohmann::json::array();
        for (const auto& part : w.parts) {
            nlohmann::json jp = nlohmann::json::array();
            for (const TailSegment& t : part)
                jp.push_back({{"tail", t.tail_edge}, {"base", t.base}});
            j["parts"].push_back(jp);
        }
        out << j.dump(2) << "\n";
    } else {
        std::vector<EdgeId> core_edges;
        for (const Edge& e : w.core.edges) core_edges.push_back(e.id);
        std::sort(core_edges.begin(), core_edges.end());
        out << "K:";
        for (const EdgeId& e : core_edges) out << " " << e;
        out << "\n";
        for (std::size_t i = 0; i < w.parts.size(); ++i) {
            out << "part " << (i + 1) << ":";
            for (const TailSegment& t : w.parts[i]) out << " " << t.tail_edge << "@" << t.base;
            out << "\n";
        }
    }
    return 0;
}

int run_compactify(const Options& opt, std::ostream& out) {
    TopoGraph g = load_graph_file(opt.input);
    if (opt.compactify_mode == "freudenthal") {
        print_graph(freudenthal(g), opt.json, out);
    } else if (opt.compactify_mode == "alexandroff") {
        AlexandroffResult r = alexandroff(g);
        print_graph(r.graph, opt.json, out, {{"infinity", r.infinity_vertex}});
    } else {  // partition
        std::vector<std::vector<SlotRef>> blocks;
        for (const std::string& spec : opt.blocks) blocks.push_back(parse_block(spec));
        print_graph(finite_compactification(g, blocks), opt.json, out);
    }
    return 0;
}

int run_collapse(const Options& opt, std::ostream& out) {
    TopoGraph g = load_graph_file(opt.input);
    CollapseResult r = collapse(g, parse_point_arg(g, opt.point_p), parse_point_arg(g, opt.point_q));
    print_graph(r.graph, opt.json, out, {{"merged", r.merged}});
    return 0;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    EnumerationBudget budget{opt.max_edges, opt.connected, opt.min_points};

    std::string cache_dir = opt.cache_dir;
    if (cache_dir.empty())
        if (const char* env = std::getenv("TOPODECK_CACHE")) cache_dir = env;

    InjectivityReport report;
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::string path = cache_dir + "/decks.cache";
        DeckCache cache = DeckCache::load(path);
        if (cache.corrupt_records() > 0)
            err << "warning: dropped " << cache.corrupt_records()
                << " corrupt cache record(s) (checksum mismatch); regenerating\n";
        report = verify_deck_injectivity(budget, &cache);
        cache.save(path);
    } else {
        report = verify_deck_injectivity(budget);
    }

    if (opt.report_format == "json")
        out << report_to_json(report).dump(2) << "\n";
    else
        out << render_report_text(report);
    return report.collisions.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topological graph decks, finite compactifications and reconstruction checks"};
    app.name("topodeck");
    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "graph file (text or JSON)")->required();
        cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    };

    CLI::App* canon_cmd = app.add_subcommand("canon", "print the canonical certificate");
    add_input(canon_cmd);

    CLI::App* deck_cmd = app.add_subcommand("deck", "print the deck of a compact graph");
    add_input(deck_cmd);
    deck_cmd->add_flag("--cards", opt.cards, "one '<point class> -> <certificate>' line per class");

    CLI::App* estar_cmd = app.add_subcommand("estar", "print E(x) for every point class");
    add_input(estar_cmd);

    CLI::App* ends_cmd = app.add_subcommand("ends", "print the number of ends");
    add_input(ends_cmd);

    CLI::App* nstar_cmd = app.add_subcommand("nstar", "maximal N-star size, or a witness");
    add_input(nstar_cmd);
    nstar_cmd->add_option("--witness", opt.witness_n, "print an N-star witness for this N");

    CLI::App* comp_cmd = app.add_subcommand("compactify", "compactify a non-compact graph");
    comp_cmd->add_option("mode", opt.compactify_mode, "freudenthal | alexandroff | partition")
        ->required()
        ->check(CLI::IsMember({"freudenthal", "alexandroff", "partition"}));
    add_input(comp_cmd);
    comp_cmd->add_option("--block", opt.blocks,
                         "partition block: comma-separated <edge-id>:<0|1> slots (repeatable)");

    CLI::App* collapse_cmd = app.add_subcommand("collapse", "identify two point classes");
    add_input(collapse_cmd);
    collapse_cmd->add_option("p", opt.point_p, "first point class")->required();
    collapse_cmd->add_option("q", opt.point_q, "second point class")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "exhaustively check deck injectivity up to a budget");
    verify_cmd->add_option("--max-edges", opt.max_edges, "edge budget (>= 1)")->required();
    verify_cmd->add_flag("--connected", opt.connected, "restrict to connected spaces");
    verify_cmd->add_option("--min-points", opt.min_points, "minimum point count (default 3)");
    verify_cmd->add_option("--cache", opt.cache_dir,
                           "cache directory (or set TOPODECK_CACHE)");
    verify_cmd->add_option("--report", opt.report_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (canon_cmd->parsed()) return run_canon(opt, out);
        if (deck_cmd->parsed()) return run_deck(opt, out);
        if (estar_cmd->parsed()) return run_estar(opt, out);
        if (ends_cmd->parsed()) return run_ends(opt, out);
        if (nstar_cmd->parsed()) return run_nstar(opt, out);
        if (comp_cmd->parsed()) return run_compactify(opt, out);
        if (collapse_cmd->parsed()) return run_collapse(opt, out);
        if (verify_cmd->parsed()) return run_verify(opt, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace topodeck
