#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "dikernel/text_format.hpp"
#include "support.hpp"

using namespace dikernel;
using support::kind_of;

namespace {

std::optional<std::size_t> error_line(std::string_view text) {
  try {
    parse_digraph_text(text);
  } catch (const Error& e) {
    return e.line();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("parse the triangle") {
  CHECK(parse_digraph_text("n 3\n0 1\n1 2\n2 0\n") == directed_cycle(3));
}

TEST_CASE("comments, names and blank lines") {
  auto doc = parse_digraph_document("# name: tri\n\n# a comment\nn 3   # trailing\n0 1\n\n1 2\n2 0\n");
  REQUIRE(doc.name);
  CHECK(*doc.name == "tri");
  CHECK(doc.digraph == directed_cycle(3));
  CHECK_FALSE(parse_digraph_document("n 1\n").name);
}

TEST_CASE("parse errors carry kinds and lines") {
  CHECK(kind_of([] { parse_digraph_text("n 2\n0 0\n"); }) == ErrorKind::LoopArc);
  CHECK(error_line("n 2\n0 0\n") == 2U);
  CHECK(kind_of([] { parse_digraph_text("n 2\n0 1\n0 1\n"); }) == ErrorKind::DuplicateArc);
  CHECK(error_line("n 2\n0 1\n0 1\n") == 3U);
  CHECK(kind_of([] { parse_digraph_text("n 2\n0 2\n"); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { parse_digraph_text("0 1\n"); }) == ErrorKind::SyntaxError);
  CHECK(error_line("0 1\n") == 1U);
  CHECK(kind_of([] { parse_digraph_text("n 2\n0 x\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_digraph_text("n 2\n0 1 1\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_digraph_text("n -1\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_digraph_text(""); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_digraph_text("n 100000\n"); }) == ErrorKind::SizeBound);
}

TEST_CASE("format is canonical and round-trips") {
  auto d = parse_digraph_text("n 4\n3 0\n0 2\n1 0\n0 1\n");
  CHECK(format_digraph(d) == "n 4\n0 1\n0 2\n1 0\n3 0\n");
  for (const auto& g : support::corpus(50, 9, 71)) {
    CHECK(parse_digraph_text(format_digraph(g)) == g);
  }
  DigraphDocument doc{"C6", directed_cycle(6)};
  auto again = parse_digraph_document(format_digraph_document(doc));
  CHECK(again.name == doc.name);
  CHECK(again.digraph == doc.digraph);
}

TEST_CASE("files") {
  auto path = (std::filesystem::temp_directory_path() / "dikernel_text_format_test.txt").string();
  write_text_file(path, format_digraph(directed_cycle(4), "C4"));
  auto doc = read_digraph_file(path);
  CHECK(doc.digraph == directed_cycle(4));
  CHECK(*doc.name == "C4");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_digraph_file(path), Error);
}
