#pragma once

// Random instance generators shared by the unit and acceptance suites.

#include <cstddef>
#include <vector>

#include "algmatch/gf.hpp"
#include "algmatch/graph.hpp"
#include "algmatch/lmp.hpp"
#include "algmatch/matrix.hpp"
#include "algmatch/poly.hpp"

namespace algmatch::testing {

/// Each vertex pair gets a weight-0 edge with probability `density` and,
/// independently, a weight-1 edge with probability `density`.
inline WeightedGraph random_weighted_graph(std::size_t n, double density, SeededRng& rng) {
  const auto threshold = static_cast<u64>(density * 1'000'000.0);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      for (int w = 0; w < 2; ++w) {
        if (rng.uniform_below(1'000'000) < threshold) edges.push_back({u, v, w});
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

/// A simple graph from the bits of `mask` over the pairs of K_n in
/// lexicographic order; all edges weight 0.
inline WeightedGraph graph_from_mask(std::size_t n, u64 mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1) edges.push_back({u, v, 0});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

inline SkewMatrix random_skew(std::size_t n, SeededRng& rng, const PrimeModulus& mod) {
  std::vector<u64> upper(n * (n > 0 ? n - 1 : 0) / 2);
  for (auto& x : upper) x = rng.uniform_below(mod.value());
  return SkewMatrix::from_upper(n, upper, mod);
}

/// Random polynomial of exact degree `degree` (nonzero leading coefficient).
inline Polynomial random_poly(std::size_t degree, SeededRng& rng, const PrimeModulus& mod) {
  std::vector<u64> c(degree + 1);
  for (auto& x : c) x = rng.uniform_below(mod.value());
  c[degree] = 1 + rng.uniform_below(mod.value() - 1);
  return Polynomial(std::move(c), mod);
}

/// Sparse small-integer LMP instance: each column entry is nonzero with
/// probability 1/2, drawn from {-2..2}, so bases are neither rare nor
/// universal.
inline LmpInstance random_lmp(std::size_t dimension, std::size_t lines, SeededRng& rng, const PrimeModulus& mod) {
  FieldMatrix z(dimension, 2 * lines, mod);
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t c = 0; c < 2 * lines; ++c) {
      if (rng.uniform_below(2) == 0) continue;
      z(i, c) = mod.reduce_signed(static_cast<std::int64_t>(rng.uniform_below(5)) - 2);
    }
  }
  std::vector<bool> weights(lines);
  for (std::size_t l = 0; l < lines; ++l) weights[l] = rng.uniform_below(2) == 1;
  return LmpInstance(std::move(z), std::move(weights));
}

}  // namespace algmatch::testing
