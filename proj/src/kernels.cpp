#include "dikernel/kernels.hpp"

#include <string>

#include "dikernel/error.hpp"
#include "mask_kernel.hpp"

namespace dikernel {

namespace detail {

MaskDigraph::MaskDigraph(const Digraph& d) : n(d.vertex_count()), out(d.vertex_count(), 0) {
  for (const auto& [u, v] : d.arcs()) out[u] |= bit(v);
}

Mask reach_within(const MaskDigraph& g, Mask within, Vertex u, std::uint32_t radius) {
  Mask seen = bit(u);
  Mask frontier = seen;
  for (std::uint32_t step = 0; step < radius && frontier != 0; ++step) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= g.out[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

namespace {

class LeastKernelSearch {
 public:
  LeastKernelSearch(const MaskDigraph& g, Mask within, std::uint32_t k, std::uint32_t l)
      : within_(within), conflict_(g.n, 0), absorbs_(g.n, 0), absorbers_(g.n, 0) {
    std::vector<Mask> near(g.n, 0);
    for (Mask m = within; m != 0; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      near[u] = k <= 1 ? bit(u) : reach_within(g, within, u, k - 1);
      absorbers_[u] = reach_within(g, within, u, l);
    }
    for (Mask m = within; m != 0; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      for (Mask r = absorbers_[u]; r != 0; r &= r - 1) {
        absorbs_[static_cast<std::size_t>(std::countr_zero(r))] |= bit(u);
      }
      for (Mask r = near[u] & ~bit(u); r != 0; r &= r - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(r));
        conflict_[u] |= bit(static_cast<Vertex>(v));
        conflict_[v] |= bit(u);
      }
    }
  }

  std::optional<Mask> run(std::uint64_t* examined) {
    examined_ = 0;
    auto result = search(0, 0, 0, -1);
    if (examined != nullptr) *examined = examined_;
    return result;
  }

 private:
  std::optional<Mask> search(Mask current, Mask absorbed, Mask blocked, int last) {
    ++examined_;
    if ((absorbed & within_) == within_) return current;
    const Mask available = within_ & ~blocked & ~low_mask(static_cast<std::size_t>(last + 1));
    // Every vertex still unabsorbed needs an absorber among later candidates.
    for (Mask open = within_ & ~absorbed; open != 0; open &= open - 1) {
      if ((absorbers_[static_cast<std::size_t>(std::countr_zero(open))] & available) == 0) {
        return std::nullopt;
      }
    }
    for (Mask a = available; a != 0; a &= a - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(a));
      auto found = search(current | bit(v), absorbed | absorbs_[v], blocked | conflict_[v],
                          static_cast<int>(v));
      if (found) return found;
    }
    return std::nullopt;
  }

  Mask within_;
  std::vector<Mask> conflict_;
  /// absorbs_[v]: vertices u with d(u, v) <= l (v included).
  std::vector<Mask> absorbs_;
  /// absorbers_[u]: vertices v with d(u, v) <= l (u included).
  std::vector<Mask> absorbers_;
  std::uint64_t examined_ = 0;
};

}  // namespace

std::optional<Mask> least_kernel(const MaskDigraph& g, Mask within, std::uint32_t k,
                                 std::uint32_t l, std::uint64_t* examined) {
  return LeastKernelSearch(g, within, k, l).run(examined);
}

VertexSet to_vertex_set(Mask m) {
  VertexSet out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

}  // namespace detail

namespace {

void check_size(std::size_t n, std::size_t bound, const char* what) {
  if (n > bound || n > detail::kMaxMaskVertices) {
    throw Error(ErrorKind::SizeBound, std::string(what) + ": " + std::to_string(n) +
                                          " vertices exceeds the bound of " +
                                          std::to_string(std::min(bound, detail::kMaxMaskVertices)));
  }
}

}  // namespace

Digraph k_closure(const Digraph& d, std::uint32_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "closure radius must be at least 1");
  const auto dist = distance_matrix(d);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (u != v && dist(u, v).within(k)) arcs.emplace_back(u, v);
    }
  }
  return Digraph::build(d.vertex_count(), arcs);
}

bool is_k_independent(const DistanceMatrix& dist, const VertexSet& s, std::uint32_t k) {
  validate_vertex_set(dist.size(), s);
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u != v && !dist(u, v).at_least(k)) return false;
    }
  }
  return true;
}

bool is_k_independent(const Digraph& d, const VertexSet& s, std::uint32_t k) {
  return is_k_independent(distance_matrix(d), s, k);
}

bool is_l_absorbent(const DistanceMatrix& dist, const VertexSet& s, std::uint32_t l) {
  validate_vertex_set(dist.size(), s);
  for (Vertex u = 0; u < dist.size(); ++u) {
    if (contains(s, u)) continue;
    bool absorbed = false;
    for (Vertex v : s) {
      if (dist(u, v).within(l)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) return false;
  }
  return true;
}

bool is_l_absorbent(const Digraph& d, const VertexSet& s, std::uint32_t l) {
  return is_l_absorbent(distance_matrix(d), s, l);
}

bool is_kl_kernel(const DistanceMatrix& dist, const VertexSet& s, KernelQuery q) {
  return is_k_independent(dist, s, q.k) && is_l_absorbent(dist, s, q.l);
}

bool is_kl_kernel(const Digraph& d, const VertexSet& s, KernelQuery q) {
  return is_kl_kernel(distance_matrix(d), s, q);
}

KernelResult find_kl_kernel(const Digraph& d, KernelQuery q, const SearchLimits& limits) {
  if (q.k < 2 || q.l < 1) {
    throw Error(ErrorKind::InvalidArgument, "kernel query needs k >= 2 and l >= 1");
  }
  check_size(d.vertex_count(), limits.max_vertices, "kernel search");
  detail::MaskDigraph g(d);
  KernelResult result;
  auto found = detail::least_kernel(g, detail::low_mask(d.vertex_count()), q.k, q.l,
                                    &result.subsets_examined);
  if (found) {
    result.found = true;
    result.witness = detail::to_vertex_set(*found);
  }
  return result;
}

KernelResult find_kernel_via_closure(const Digraph& d, std::uint32_t k, const SearchLimits& limits) {
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "closure reduction needs k >= 3");
  check_size(d.vertex_count(), limits.max_vertices, "kernel search");
  return find_kl_kernel(k_closure(d, k - 1), KernelQuery::kernel(), limits);
}

namespace {

PerfectionResult check_induced(const Digraph& d, const PerfectionLimits& limits, KernelQuery q,
                               bool include_whole) {
  check_size(d.vertex_count(), limits.max_vertices, "perfection check");
  detail::MaskDigraph g(d);
  const detail::Mask all = detail::low_mask(d.vertex_count());
  PerfectionResult result;
  detail::for_each_subset_lex(all, 0, -1, [&](detail::Mask s) {
    if (s == all && !include_whole) return true;
    if (detail::least_kernel(g, s, q.k, q.l)) return true;
    result.perfect = false;
    result.counterexample = detail::to_vertex_set(s);
    return false;
  });
  return result;
}

}  // namespace

PerfectionResult is_kernel_perfect(const Digraph& d, const PerfectionLimits& limits) {
  return check_induced(d, limits, KernelQuery::kernel(), true);
}

PerfectionResult is_quasi_3_kernel_perfect(const Digraph& d, const PerfectionLimits& limits) {
  return check_induced(d, limits, KernelQuery::k_kernel(3), false);
}

PerfectionResult is_3_kernel_perfect(const Digraph& d, const PerfectionLimits& limits) {
  auto quasi = is_quasi_3_kernel_perfect(d, limits);
  if (!quasi.perfect) return quasi;
  detail::MaskDigraph g(d);
  const detail::Mask all = detail::low_mask(d.vertex_count());
  if (detail::least_kernel(g, all, 3, 2)) return quasi;
  return {false, detail::to_vertex_set(all)};
}

}  // namespace dikernel
