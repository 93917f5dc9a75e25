#include "dikernel/digraph.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <string>

#include "dikernel/error.hpp"

namespace dikernel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopArc: return "LoopArc";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::InvalidVertexSet: return "InvalidVertexSet";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NotAKernel: return "NotAKernel";
    case ErrorKind::SubkernelMissing: return "SubkernelMissing";
    case ErrorKind::NoBaseKernel: return "NoBaseKernel";
    case ErrorKind::NoRoadFound: return "NoRoadFound";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), line_(line) {}

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n) + "-1");
  }
}

}  // namespace

Digraph Digraph::build(std::size_t vertex_count, const std::vector<Arc>& arcs) {
  Digraph g;
  g.n_ = vertex_count;
  g.adjacency_.assign(vertex_count * vertex_count, 0);
  g.out_.resize(vertex_count);
  g.in_.resize(vertex_count);
  for (const auto& [u, v] : arcs) {
    check_vertex(vertex_count, u);
    check_vertex(vertex_count, v);
    if (u == v) throw Error(ErrorKind::LoopArc, "loop at vertex " + std::to_string(u));
    auto& cell = g.adjacency_[static_cast<std::size_t>(u) * vertex_count + v];
    if (cell != 0) {
      throw Error(ErrorKind::DuplicateArc,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
    }
    cell = 1;
  }
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v = 0; v < vertex_count; ++v) {
      if (g.adjacency_[static_cast<std::size_t>(u) * vertex_count + v] != 0) {
        g.arcs_.emplace_back(u, v);
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
      }
    }
  }
  return g;
}

std::vector<Distance> distances_from(const Digraph& d, Vertex source) {
  check_vertex(d.vertex_count(), source);
  std::vector<Distance> dist(d.vertex_count());
  std::queue<Vertex> frontier;
  dist[source] = Distance(0);
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : d.out_neighbors(u)) {
      if (!dist[w].is_reachable()) {
        dist[w] = Distance(dist[u].value() + 1);
        frontier.push(w);
      }
    }
  }
  return dist;
}

Distance distance(const Digraph& d, Vertex u, Vertex v) {
  check_vertex(d.vertex_count(), v);
  return distances_from(d, u)[v];
}

DistanceMatrix distance_matrix(const Digraph& d) {
  DistanceMatrix m(d.vertex_count());
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    auto row = distances_from(d, u);
    for (Vertex v = 0; v < d.vertex_count(); ++v) m.at(u, v) = row[v];
  }
  return m;
}

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n <= 1) return true;
  // Vertex 0 reaches everything and everything reaches vertex 0.
  auto forward = distances_from(d, 0);
  if (!std::all_of(forward.begin(), forward.end(), [](Distance x) { return x.is_reachable(); })) {
    return false;
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : d.in_neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

void validate_vertex_set(std::size_t vertex_count, const VertexSet& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    check_vertex(vertex_count, subset[i]);
    if (i > 0 && subset[i - 1] >= subset[i]) {
      throw Error(ErrorKind::InvalidVertexSet, "vertex set must be sorted and distinct");
    }
  }
}

VertexSet normalize_vertex_set(VertexSet subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

VertexSet InducedSubdigraph::lift(const VertexSet& inner) const {
  VertexSet out;
  out.reserve(inner.size());
  for (Vertex v : inner) out.push_back(to_original.at(v));
  return out;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& subset) {
  validate_vertex_set(d.vertex_count(), subset);
  InducedSubdigraph result;
  result.to_original = subset;
  result.from_original.assign(d.vertex_count(), std::nullopt);
  for (Vertex i = 0; i < subset.size(); ++i) result.from_original[subset[i]] = i;
  std::vector<Arc> arcs;
  for (const auto& [u, v] : d.arcs()) {
    if (result.from_original[u] && result.from_original[v]) {
      arcs.emplace_back(*result.from_original[u], *result.from_original[v]);
    }
  }
  result.digraph = Digraph::build(subset.size(), arcs);
  return result;
}

InducedSubdigraph remove_vertex(const Digraph& d, Vertex v) {
  check_vertex(d.vertex_count(), v);
  VertexSet rest;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    if (u != v) rest.push_back(u);
  }
  return induced_subdigraph(d, rest);
}

VertexSet in_neighborhood_at_distance(const DistanceMatrix& dist, const VertexSet& subset,
                                      std::uint32_t distance) {
  if (subset.empty()) throw Error(ErrorKind::EmptySet, "in-neighbourhood of an empty set");
  validate_vertex_set(dist.size(), subset);
  VertexSet out;
  for (Vertex u = 0; u < dist.size(); ++u) {
    if (contains(subset, u)) continue;
    for (Vertex v : subset) {
      if (dist(u, v) == Distance(distance)) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

VertexSet in_neighborhood_at_distance(const Digraph& d, const VertexSet& subset,
                                      std::uint32_t distance) {
  return in_neighborhood_at_distance(distance_matrix(d), subset, distance);
}

VertexSet out_cone(const DistanceMatrix& dist, const VertexSet& subset, std::uint32_t radius) {
  if (subset.empty()) throw Error(ErrorKind::EmptySet, "cone of an empty set");
  validate_vertex_set(dist.size(), subset);
  VertexSet out;
  for (Vertex v = 0; v < dist.size(); ++v) {
    for (Vertex u : subset) {
      Distance x = dist(u, v);
      if (x.within(radius) && x.value() > 0) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

VertexSet out_cone(const Digraph& d, const VertexSet& subset, std::uint32_t radius) {
  return out_cone(distance_matrix(d), subset, radius);
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet all_vertices(std::size_t vertex_count) {
  VertexSet out(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) out[v] = v;
  return out;
}

std::optional<std::vector<Vertex>> shortest_path(const Digraph& d, Vertex u, Vertex v) {
  check_vertex(d.vertex_count(), u);
  check_vertex(d.vertex_count(), v);
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> parent(d.vertex_count(), kNone);
  std::queue<Vertex> frontier;
  parent[u] = u;
  frontier.push(u);
  while (!frontier.empty() && parent[v] == kNone) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex w : d.out_neighbors(x)) {
      if (parent[w] == kNone) {
        parent[w] = x;
        frontier.push(w);
      }
    }
  }
  if (parent[v] == kNone) return std::nullopt;
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace dikernel
