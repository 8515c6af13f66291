#pragma once

// Brute-force ground truth for small inputs. Nothing here uses elimination,
// pencils or randomness.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "algmatch/graph.hpp"
#include "algmatch/lmp.hpp"
#include "algmatch/matching.hpp"
#include "algmatch/matrix.hpp"

namespace algmatch::oracle {

inline constexpr std::size_t kMaxMatchingVertices = 12;
inline constexpr std::size_t kMaxPfaffianSize = 10;
inline constexpr std::size_t kMaxLines = 12;
inline constexpr std::size_t kMaxLmpDimension = 10;

struct MatchingEnumeration {
  std::vector<std::vector<Edge>> matchings;
  std::multiset<int> weights;

  /// Distinct weights present.
  std::set<int> weight_set() const { return {weights.begin(), weights.end()}; }
};

/// Every perfect matching, branching on the smallest uncovered vertex.
/// Throws UsageError above kMaxMatchingVertices.
MatchingEnumeration enum_perfect_matchings(const WeightedGraph& g);

/// Signed sum over the perfect matchings of K_n, each written as the
/// permutation (i1 j1 i2 j2 ...) with i1 < i2 < ... and ik < jk. Throws
/// UsageError for odd n or n above kMaxPfaffianSize.
FieldElement brute_pfaffian(const SkewMatrix& a);

/// Leibniz expansion. Throws UsageError above 8x8.
FieldElement brute_determinant(const FieldMatrix& a);

struct ParityBase {
  std::vector<std::size_t> lines;
  int weight = 0;
};

/// Every set of |V|/2 lines whose columns have rank |V|. Empty for odd |V|.
/// Throws UsageError above kMaxLines lines or kMaxLmpDimension rows.
std::vector<ParityBase> enum_parity_bases(const LmpInstance& inst);

/// det(constant + y * linear) by evaluating det at n+1 points and
/// interpolating.
Polynomial interpolated_pencil_det(const SkewPencil& pencil);

/// pf(constant + y * linear) with its true sign, by evaluating brute_pfaffian
/// at n/2+1 points and interpolating.
Polynomial interpolated_pencil_pfaffian(const SkewPencil& pencil);

/// feasible[k] iff some perfect matching of g has weight k, k = 0..n/2.
std::vector<bool> feasible_weights(const WeightedGraph& g);

}  // namespace algmatch::oracle
