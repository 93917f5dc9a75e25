#include "doctest.h"

#include "support.hpp"

using namespace dikernel;

using support::kind_of;

TEST_CASE("build rejects malformed arc lists") {
  CHECK(kind_of([] { build_digraph(2, {{0, 0}}); }) == ErrorKind::LoopArc);
  CHECK(kind_of([] { build_digraph(2, {{0, 1}, {0, 1}}); }) == ErrorKind::DuplicateArc);
  CHECK(kind_of([] { build_digraph(2, {{0, 2}}); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("arcs are sorted and neighbour lists ascending") {
  auto d = build_digraph(4, {{2, 0}, {0, 3}, {0, 1}, {3, 0}});
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {0, 3}, {2, 0}, {3, 0}});
  auto out = d.out_neighbors(0);
  CHECK(std::vector<Vertex>(out.begin(), out.end()) == std::vector<Vertex>{1, 3});
  auto in = d.in_neighbors(0);
  CHECK(std::vector<Vertex>(in.begin(), in.end()) == std::vector<Vertex>{2, 3});
  CHECK(d.has_arc(2, 0));
  CHECK_FALSE(d.has_arc(0, 2));
}

TEST_CASE("unreachable compares greater than any length") {
  CHECK(Distance(1000) < Distance::unreachable());
  CHECK(Distance::unreachable() == Distance{});
  CHECK_FALSE(Distance::unreachable().within(100));
  CHECK(Distance::unreachable().at_least(100));
  CHECK(Distance(2).within(2));
  CHECK_FALSE(Distance(2).at_least(3));
}

TEST_CASE("distance matrix agrees with Floyd-Warshall") {
  for (const auto& d : support::corpus(120, 9, 31)) {
    auto want = oracle::floyd(oracle::from(d));
    auto got = distance_matrix(d);
    for (Vertex u = 0; u < d.vertex_count(); ++u) {
      for (Vertex v = 0; v < d.vertex_count(); ++v) {
        Distance expect = want[u][v] >= oracle::kInf ? Distance{} : Distance(want[u][v]);
        REQUIRE(got(u, v) == expect);
        if (auto path = shortest_path(d, u, v)) {
          REQUIRE(path->size() == want[u][v] + 1U);
          for (std::size_t i = 0; i + 1 < path->size(); ++i) {
            REQUIRE(d.has_arc((*path)[i], (*path)[i + 1]));
          }
        } else {
          REQUIRE(want[u][v] >= oracle::kInf);
        }
      }
    }
  }
}

TEST_CASE("strong connectivity agrees with all-pairs reachability") {
  for (const auto& d : support::corpus(200, 7, 32)) {
    auto dist = oracle::floyd(oracle::from(d));
    bool all = true;
    for (const auto& row : dist) {
      for (int x : row) all = all && x < oracle::kInf;
    }
    CHECK(is_strongly_connected(d) == all);
  }
  CHECK(is_strongly_connected(Digraph{}));
  CHECK(is_strongly_connected(build_digraph(1, {})));
  CHECK_FALSE(is_strongly_connected(build_digraph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("induced subdigraphs keep exactly the arcs inside the set") {
  auto d = build_digraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 4}, {4, 3}, {3, 2}});
  auto sub = induced_subdigraph(d, {0, 2, 4});
  CHECK(sub.to_original == VertexSet{0, 2, 4});
  CHECK(sub.digraph.arcs() == std::vector<Arc>{{1, 0}, {1, 2}});
  CHECK(sub.lift({0, 2}) == VertexSet{0, 4});
  CHECK_FALSE(sub.from_original[1].has_value());
  CHECK(*sub.from_original[4] == 2);

  auto rest = remove_vertex(d, 2);
  CHECK(rest.to_original == VertexSet{0, 1, 3, 4});
  CHECK(rest.digraph.arcs() == std::vector<Arc>{{0, 1}, {3, 2}});
}

TEST_CASE("in-neighbourhoods and out-cones follow their definitions") {
  for (const auto& d : support::corpus(80, 8, 33)) {
    if (d.vertex_count() < 2) continue;
    auto dist = oracle::floyd(oracle::from(d));
    VertexSet s{0, static_cast<Vertex>(d.vertex_count() - 1)};
    for (std::uint32_t l = 1; l <= 3; ++l) {
      VertexSet want_in, want_cone;
      for (int u = 0; u < static_cast<int>(d.vertex_count()); ++u) {
        bool in = false, cone = false;
        for (Vertex v : s) {
          in = in || dist[u][v] == static_cast<int>(l);
          cone = cone || (dist[v][u] > 0 && dist[v][u] <= static_cast<int>(l));
        }
        if (in && !contains(s, u)) want_in.push_back(u);
        if (cone) want_cone.push_back(u);
      }
      CHECK(in_neighborhood_at_distance(d, s, l) == want_in);
      CHECK(out_cone(d, s, l) == want_cone);
    }
  }
  auto c3 = directed_cycle(3);
  CHECK(kind_of([&] { in_neighborhood_at_distance(c3, {}, 1); }) == ErrorKind::EmptySet);
  CHECK(kind_of([&] { out_cone(c3, {}, 1); }) == ErrorKind::EmptySet);
}

TEST_CASE("vertex set helpers") {
  CHECK(normalize_vertex_set({3, 1, 3, 0}) == VertexSet{0, 1, 3});
  CHECK(set_union({0, 2}, {1, 2}) == VertexSet{0, 1, 2});
  CHECK(set_intersection({0, 2, 4}, {2, 3, 4}) == VertexSet{2, 4});
  CHECK(set_difference({0, 2, 4}, {2}) == VertexSet{0, 4});
  CHECK(all_vertices(3) == VertexSet{0, 1, 2});
  CHECK(kind_of([] { validate_vertex_set(3, {2, 1}); }) == ErrorKind::InvalidVertexSet);
  CHECK(kind_of([] { validate_vertex_set(3, {1, 3}); }) == ErrorKind::VertexOutOfRange);
}
