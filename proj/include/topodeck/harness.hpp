#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "topodeck/canon.hpp"
#include "topodeck/graph.hpp"

namespace topodeck {

/// Bounds for the enumeration universe. Circle components and isolated
/// vertices do not count against max_edges; each gets its own budget equal
/// to max_edges, which keeps the universe finite while covering the circle
/// and isolated-point corners at every budget. Valid budgets have
/// max_edges >= 1 and min_points >= 3 (spaces with fewer than three points
/// are excluded throughout).
struct EnumerationBudget {
    unsigned max_edges = 0;
    bool connected_only = false;
    unsigned min_points = 3;

    bool operator==(const EnumerationBudget&) const = default;
};

/// Exactly one representative per homeomorphism class of compact graph-like
/// spaces with at most max_edges edges: smoothed multigraphs with loops,
/// plus circle counts and isolated vertices, deduplicated by certificate and
/// filtered by the budget's connectivity and point-count flags. Returned in
/// strictly increasing certificate order. Throws std::invalid_argument when
/// max_edges < 1.
std::vector<CanonicalForm> enumerate_canonical(const EnumerationBudget& budget);

/// FNV-1a 64-bit, rendered as 16 hex digits. Used for deck hashes and cache
/// record checksums.
std::string fnv1a64_hex(const std::string& data);

/// On-disk memo of deck computations, keyed by graph certificate. One record
/// per line under a versioned header; each record carries a checksum, and
/// records that fail it are dropped (and later regenerated) rather than
/// served.
class DeckCache {
  public:
    static DeckCache load(const std::string& path);

    const std::vector<std::string>* lookup(const std::string& graph_cert) const;
    void store(const std::string& graph_cert, std::vector<std::string> cards);
    void save(const std::string& path) const;

    std::size_t size() const { return entries_.size(); }
    std::size_t corrupt_records() const { return corrupt_; }

  private:
    std::map<std::string, std::vector<std::string>> entries_;
    std::size_t corrupt_ = 0;
};

/// Outcome of the deck-injectivity sweep over one enumeration universe.
/// deck_groups keys every deck (sorted card certificates joined by newlines)
/// to the graphs sharing it; collisions lists the groups with two or more
/// distinct graphs — empty collisions means the deck determines the graph on
/// this universe. min_estar records, per graph, the minimal E value over its
/// point classes. deck_groups is derived diagnostic state and is not part of
/// the serialized report or of operator==.
struct InjectivityReport {
    EnumerationBudget budget;
    std::size_t universe_size = 0;
    std::map<std::string, std::vector<std::string>> deck_groups;

    struct Collision {
        std::string deck_hash;
        std::vector<std::string> graphs;
        bool operator==(const Collision&) const = default;
    };
    std::vector<Collision> collisions;
    std::map<std::string, unsigned> min_estar;

    /// True when every enumerated graph produced at least one card and every
    /// card's maximal N-star size came back finite — the hypothesis under
    /// which deck injectivity is guaranteed.
    bool every_graph_has_finitely_compactifiable_card = false;

    bool operator==(const InjectivityReport& other) const {
        return budget == other.budget && universe_size == other.universe_size &&
               collisions == other.collisions && min_estar == other.min_estar;
    }
};

/// Enumerates the universe, computes every deck (through the cache when one
/// is given), groups graphs by deck and reports collisions and the min-E
/// table.
InjectivityReport verify_deck_injectivity(const EnumerationBudget& budget,
                                          DeckCache* cache = nullptr);

/// Deterministic renderings of a report. The JSON schema is
/// {budget, universe_size, collisions: [{deck_hash, graphs: [...]}],
///  min_estar: {...}} and round-trips through report_from_json.
std::string render_report_text(const InjectivityReport& report);
nlohmann::json report_to_json(const InjectivityReport& report);
InjectivityReport report_from_json(const nlohmann::json& j);

}  // namespace topodeck
