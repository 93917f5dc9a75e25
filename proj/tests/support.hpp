#pragma once

#include <functional>
#include <vector>

#include "doctest.h"

#include "dikernel/digraph.hpp"
#include "dikernel/error.hpp"
#include "dikernel/generators.hpp"
#include "oracle.hpp"

namespace support {

/// Kind of the Error thrown by `f`; fails the test when nothing is thrown.
inline dikernel::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const dikernel::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return dikernel::ErrorKind::InvalidArgument;
}

inline oracle::Set to_oracle(const dikernel::VertexSet& s) { return {s.begin(), s.end()}; }

inline dikernel::VertexSet to_library(const oracle::Set& s) { return {s.begin(), s.end()}; }

inline std::vector<std::vector<int>> to_oracle(const std::vector<std::vector<dikernel::Vertex>>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& x : v) out.emplace_back(x.begin(), x.end());
  return out;
}

/// A fixed corpus of small digraphs: half arbitrary, half strongly connected.
inline std::vector<dikernel::Digraph> corpus(std::size_t count, std::size_t max_n,
                                             std::uint64_t seed) {
  static constexpr double kProbs[] = {0.1, 0.2, 0.3, 0.45, 0.6};
  std::vector<dikernel::Digraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    dikernel::SplitMix64 rng(dikernel::trial_seed(seed, i));
    std::size_t n = 1 + rng.next_below(max_n);
    double p = kProbs[rng.next_below(5)];
    std::uint64_t s = rng.next();
    out.push_back(i % 2 ? dikernel::random_digraph(n, p, s)
                        : dikernel::random_strongly_connected(n, p / 2, s));
  }
  return out;
}

}  // namespace support
