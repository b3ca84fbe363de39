#include "topodeck/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "topodeck/smooth.hpp"

namespace topodeck {

namespace {

constexpr int kOpenFar = -1;  // far-end marker for a hanging open slot

// Graph over interned vertex indices. kOpen stands for an open end and is
// chosen to sort after every vertex index.
struct Interned {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // unordered; normalized a <= b

    int open_code() const { return n; }
};

Interned intern(const TopoGraph& g) {
    std::map<VertexId, int> index;
    for (const VertexId& v : g.vertices) index.emplace(v, 0);
    int next = 0;
    for (auto& [v, i] : index) i = next++;

    Interned out;
    out.n = next;
    for (const Edge& e : g.edges) {
        int a = e.ends[0].open() ? out.open_code() : index.at(*e.ends[0].vertex);
        int b = e.ends[1].open() ? out.open_code() : index.at(*e.ends[1].vertex);
        if (a > b) std::swap(a, b);
        out.edges.emplace_back(a, b);
    }
    return out;
}

// Per-vertex lists of far-end codes, one entry per attached slot: the far
// vertex index, or kOpenFar for a half-open edge. A loop at v lists v twice.
std::vector<std::vector<int>> far_ends(const Interned& g) {
    std::vector<std::vector<int>> far(g.n);
    for (auto [a, b] : g.edges) {
        bool a_open = a == g.open_code();
        bool b_open = b == g.open_code();
        if (!a_open) far[a].push_back(b_open ? kOpenFar : b);
        if (!b_open) far[b].push_back(a_open ? kOpenFar : a);
    }
    return far;
}

// Dense re-ranking of arbitrary per-vertex keys, preserving key order.
template <typename Key>
std::vector<int> rank_colors(const std::vector<Key>& keys) {
    std::map<Key, int> order;
    for (const Key& k : keys) order.emplace(k, 0);
    int next = 0;
    for (auto& [k, r] : order) r = next++;
    std::vector<int> colors(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) colors[i] = order.at(keys[i]);
    return colors;
}

int color_count(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<int> initial_colors(const Interned& g) {
    auto far = far_ends(g);
    std::vector<std::tuple<int, int, int>> keys(g.n);
    for (int v = 0; v < g.n; ++v) {
        int degree = static_cast<int>(far[v].size());
        int loops = static_cast<int>(std::count(far[v].begin(), far[v].end(), v)) / 2;
        int open = static_cast<int>(std::count(far[v].begin(), far[v].end(), kOpenFar));
        keys[v] = {degree, loops, open};
    }
    return rank_colors(keys);
}

std::vector<int> refine(const Interned& g, std::vector<int> colors,
                        const std::vector<std::vector<int>>& far) {
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> keys(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> around;
            around.reserve(far[v].size());
            for (int f : far[v]) around.push_back(f == kOpenFar ? kOpenFar : colors[f]);
            std::sort(around.begin(), around.end());
            keys[v] = {colors[v], std::move(around)};
        }
        std::vector<int> next = rank_colors(keys);
        if (color_count(next) == color_count(colors)) return next;
        colors = std::move(next);
    }
}

// Encoding of one labeled component: [n, m, edge pairs..., ] with open = n.
// Lexicographic order on encodings is the assembly order for components.
using Encoding = std::vector<std::int64_t>;

Encoding encode(const Interned& g, const std::vector<int>& labels) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [a, b] : g.edges) {
        int la = a == g.open_code() ? g.n : labels[a];
        int lb = b == g.open_code() ? g.n : labels[b];
        if (la > lb) std::swap(la, lb);
        edges.emplace_back(la, lb);
    }
    std::sort(edges.begin(), edges.end());

    Encoding out;
    out.reserve(2 * edges.size() + 2);
    out.push_back(g.n);
    out.push_back(static_cast<std::int64_t>(edges.size()));
    for (auto [a, b] : edges) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

// First (smallest color value) cell with two or more members; empty if the
// coloring is discrete.
std::vector<int> target_cell(const std::vector<int>& colors) {
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < static_cast<int>(colors.size()); ++v) cells[colors[v]].push_back(v);
    for (auto& [c, members] : cells)
        if (members.size() >= 2) return members;
    return {};
}

void search(const Interned& g, const std::vector<std::vector<int>>& far,
            const std::vector<int>& colors, Encoding& best, bool& have_best) {
    std::vector<int> cell = target_cell(colors);
    if (cell.empty()) {
        Encoding e = encode(g, colors);
        if (!have_best || e < best) {
            best = std::move(e);
            have_best = true;
        }
        return;
    }
    for (int v : cell) {
        // Individualize v: split it off below the rest of its cell.
        std::vector<std::pair<int, int>> keys(g.n);
        for (int u = 0; u < g.n; ++u) keys[u] = {colors[u], u == v ? 0 : 1};
        search(g, far, refine(g, rank_colors(keys), far), best, have_best);
    }
}

// Canonical encoding of one connected component.
Encoding component_encoding(const TopoGraph& comp) {
    Interned in = intern(comp);
    auto far = far_ends(in);
    Encoding best;
    bool have_best = false;
    search(in, far, refine(in, initial_colors(in), far), best, have_best);
    return best;
}

// The whole-graph certificate assembles the sorted component encodings with
// vertex indices offset per component, then re-sorts the edge list globally.
// Isomorphic graphs have equal component-encoding multisets, so assembly is
// canonical; cross-component symmetry never reaches the backtracking search.
struct Assembled {
    std::int64_t n = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::int64_t circles = 0;
};

Assembled assemble(const TopoGraph& smoothed) {
    std::vector<Encoding> encs;
    for (const TopoGraph& comp : components(smoothed)) {
        if (comp.vertices.empty() && comp.edges.empty()) continue;  // bare circle
        encs.push_back(component_encoding(comp));
    }
    std::sort(encs.begin(), encs.end());

    Assembled out;
    out.circles = smoothed.circles;
    for (const Encoding& enc : encs) out.n += enc[0];

    std::int64_t offset = 0;
    for (const Encoding& enc : encs) {
        std::int64_t local_n = enc[0], m = enc[1];
        for (std::int64_t i = 0; i < m; ++i) {
            std::int64_t a = enc[2 + 2 * i], b = enc[3 + 2 * i];
            a = (a == local_n) ? out.n : a + offset;
            b = (b == local_n) ? out.n : b + offset;
            out.edges.emplace_back(a, b);
        }
        offset += local_n;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::string render(const Assembled& a) {
    std::string out = "TG1;n=" + std::to_string(a.n) + ";E=";
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        if (i > 0) out += ',';
        out += (a.edges[i].first == a.n) ? "*" : std::to_string(a.edges[i].first);
        out += '-';
        out += (a.edges[i].second == a.n) ? "*" : std::to_string(a.edges[i].second);
    }
    out += ";c=" + std::to_string(a.circles);
    return out;
}

TopoGraph rebuild(const Assembled& a) {
    TopoGraph g;
    for (std::int64_t v = 0; v < a.n; ++v) g.vertices.push_back(std::to_string(v));
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        Edge e;
        e.id = "e" + std::to_string(i);
        auto [x, y] = a.edges[i];
        e.ends[0] = (x == a.n) ? EndSlot::open_end() : EndSlot::attached(std::to_string(x));
        e.ends[1] = (y == a.n) ? EndSlot::open_end() : EndSlot::attached(std::to_string(y));
        g.edges.push_back(std::move(e));
    }
    g.circles = a.circles;
    return g;
}

}  // namespace

CanonicalForm canon(const TopoGraph& g) {
    require_valid(g, "canon");
    Assembled a = assemble(smooth(g));
    return CanonicalForm{rebuild(a), render(a)};
}

std::string certificate(const TopoGraph& g) { return canon(g).certificate; }

bool is_homeomorphic(const TopoGraph& g, const TopoGraph& h) {
    return certificate(g) == certificate(h);
}

}  // namespace topodeck
