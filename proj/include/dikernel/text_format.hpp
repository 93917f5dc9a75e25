#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dikernel/digraph.hpp"

namespace dikernel {

/// Textual digraph:
///
///   # name: triangle      (optional; any other `#` text is a comment)
///   n 3
///   0 1
///   1 2
///   2 0
///
/// Blank lines are ignored. Canonical output lists arcs lexicographically.
struct DigraphDocument {
  std::optional<std::string> name;
  Digraph digraph;
};

/// Errors carry the 1-based line: SyntaxError, LoopArc, DuplicateArc,
/// VertexOutOfRange.
DigraphDocument parse_digraph_document(std::string_view text);
inline Digraph parse_digraph_text(std::string_view text) { return parse_digraph_document(text).digraph; }

std::string format_digraph(const Digraph& d, const std::optional<std::string>& name = std::nullopt);
inline std::string format_digraph_document(const DigraphDocument& doc) {
  return format_digraph(doc.digraph, doc.name);
}

DigraphDocument read_digraph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace dikernel
