#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "topodeck/graph.hpp"

namespace topodeck {

/// Raised on malformed graph input (text or JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Line-oriented graph text format. One directive per line, '#' starts a
/// comment, blank lines are ignored:
///   v <id>            vertex
///   e <id> <u> <v>    edge attached at u and v (u = v declares a loop)
///   h <id> <u>        half-open edge attached at u
///   a <id>            open arc (both ends open)
///   c <k>             sets the circle count
/// Throws ParseError with a line number on malformed input.
TopoGraph parse_graph_text(std::string_view text);

/// Deterministic emitter: v lines sorted by id, then e/h/a lines sorted by
/// id, then the c line. parse(emit(g)) reproduces g up to member order.
std::string emit_graph_text(const TopoGraph& g);

/// JSON equivalent: {"vertices": [...], "edges": [{"id":..., "ends":
/// [{"v": id} | "open", ...]}], "circles": k}. Throws ParseError.
TopoGraph parse_graph_json(const std::string& text);
std::string emit_graph_json(const TopoGraph& g);

/// Reads a graph file, auto-detecting JSON (first non-space byte '{') vs the
/// text format. Throws ParseError on unreadable or malformed input.
TopoGraph load_graph_file(const std::string& path);

}  // namespace topodeck
