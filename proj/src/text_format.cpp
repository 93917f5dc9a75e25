#include "dikernel/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "dikernel/error.hpp"

namespace dikernel {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::SyntaxError, "expected a decimal number, got '" + std::string(token) + "'",
                line);
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

constexpr std::string_view kNamePrefix = "name:";
// Digraph keeps a dense adjacency matrix.
constexpr std::uint64_t kMaxVertices = 4096;

}  // namespace

DigraphDocument parse_digraph_document(std::string_view text) {
  DigraphDocument doc;
  std::optional<std::size_t> n;
  std::vector<Arc> arcs;
  std::vector<std::uint8_t> seen;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      auto comment = trim(line.substr(hash + 1));
      if (!n && !doc.name && comment.starts_with(kNamePrefix)) {
        doc.name = std::string(trim(comment.substr(kNamePrefix.size())));
      }
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw Error(ErrorKind::SyntaxError, "expected header 'n <count>'", line_no);
      }
      n = parse_number(tokens[1], line_no);
      if (*n > kMaxVertices) {
        throw Error(ErrorKind::SizeBound, "at most " + std::to_string(kMaxVertices) + " vertices",
                    line_no);
      }
      seen.assign(*n * *n, 0);
      continue;
    }
    if (tokens.size() != 2) throw Error(ErrorKind::SyntaxError, "expected '<u> <v>'", line_no);
    const auto u = parse_number(tokens[0], line_no);
    const auto v = parse_number(tokens[1], line_no);
    if (u >= *n || v >= *n) {
      throw Error(ErrorKind::VertexOutOfRange, "arc endpoint outside 0.." + std::to_string(*n) + "-1",
                  line_no);
    }
    if (u == v) throw Error(ErrorKind::LoopArc, "loop at vertex " + std::to_string(u), line_no);
    auto& cell = seen[u * *n + v];
    if (cell != 0) throw Error(ErrorKind::DuplicateArc, "arc repeated", line_no);
    cell = 1;
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw Error(ErrorKind::SyntaxError, "missing header 'n <count>'", line_no + 1);
  doc.digraph = Digraph::build(*n, arcs);
  return doc;
}

std::string format_digraph(const Digraph& d, const std::optional<std::string>& name) {
  std::ostringstream out;
  if (name) out << "# name: " << *name << '\n';
  out << "n " << d.vertex_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

DigraphDocument read_digraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_digraph_document(buffer.str());
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << contents;
}

}  // namespace dikernel
