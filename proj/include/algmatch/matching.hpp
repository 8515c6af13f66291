#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "algmatch/gf.hpp"
#include "algmatch/graph.hpp"
#include "algmatch/matrix.hpp"
#include "algmatch/poly.hpp"

namespace algmatch {

/// The skew matrix pencil constant + y * linear over F_p.
struct SkewPencil {
  SkewMatrix constant;
  SkewMatrix linear;

  std::size_t size() const { return constant.size(); }
  const PrimeModulus& modulus() const { return constant.matrix().modulus(); }
  /// constant + a * linear
  FieldMatrix at(u64 a) const { return constant.matrix() + linear.matrix().scaled(a); }
};

SkewPencil pencil_of(const SubstitutedTutte& st);

/// det(constant + y * linear) from a single inverse and characteristic
/// polynomial, expanding around y = shift:
///   D(y) = det(A) * s^n * charpoly(-A^{-1} L)(1/s),  A = constant + shift * linear,
///   s = y - shift.
/// Returns nullopt when A is singular.
std::optional<Polynomial> det_pencil_at(const SkewPencil& pencil, u64 shift);

/// det_pencil_at with shift 1. Throws UsageError if constant + linear is
/// singular.
Polynomial det_pencil(const SkewPencil& pencil);
Polynomial det_pencil(const SubstitutedTutte& st);

/// Like det_pencil, but when constant + linear is singular retries shifts
/// 2, 3, ..., n+1. deg D <= n, so all n+1 shifts are singular only when
/// D is identically zero, in which case the zero polynomial is returned.
Polynomial pencil_determinant(const SkewPencil& pencil);

/// +-pf(constant + y * linear), via the polynomial square root of
/// det_pencil. Same precondition as det_pencil; throws InternalError if the
/// determinant is not a square.
Polynomial pf_pencil(const SkewPencil& pencil);
Polynomial pf_pencil(const SubstitutedTutte& st);

/// +-pf from pencil_determinant; never requires a nonsingular point.
Polynomial pencil_pfaffian(const SkewPencil& pencil);

struct WeightProfile {
  /// feasible[k] for k = 0..n/2.
  std::vector<bool> feasible;
  /// The +-pfaffian polynomial in y from the accepted trial (zero if none).
  Polynomial pf_poly;
  /// Substitutions drawn, including resamples.
  int trials = 0;

  bool any() const;
  /// "k=0:1 k=1:0 ..."
  std::string to_string() const;
};

/// Weight-profile pipeline shared by graphs and matroid parity instances.
/// `draw` produces a fresh random pencil; a pencil singular at y = 1 is
/// redrawn up to `retries` times before every k is declared infeasible.
WeightProfile pencil_weight_profile(const std::function<SkewPencil()>& draw, std::size_t dimension,
                                    const PrimeModulus& modulus, int retries);

struct MatchingResult {
  std::vector<Edge> edges;
  int weight = 0;
};

/// No solution was found. `probable` marks a verdict reached only after every
/// retry produced an inconsistent substitution.
struct Infeasible {
  bool probable = false;
};

using MatchingOutcome = std::variant<MatchingResult, Infeasible>;

/// True iff `edges` are edges of g, pairwise vertex-disjoint and cover every
/// vertex.
bool is_perfect_matching(const WeightedGraph& g, std::span<const Edge> edges);

/// One-sided Monte Carlo test: a true answer is always correct; a false answer
/// is wrong with probability at most n/p. Odd n is false without sampling.
bool has_perfect_matching(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus,
                          PrimeGuard guard = PrimeGuard::kEnforce);

/// Edge-deletion self-reduction on a fixed substitution: drop each edge whose
/// removal keeps det(t0 + t1) nonzero, otherwise commit it and drop the edges
/// that meet it. Returns nullopt if det(t0 + t1) = 0 or the surviving edges
/// are not a perfect matching.
std::optional<MatchingResult> extract_perfect_matching(const SubstitutedTutte& st);

MatchingOutcome find_perfect_matching(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus,
                                      int retries = 3);

WeightProfile weight_profile(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus,
                             int retries = 3);

/// [y^k] of the pencil pfaffian after each vertex step of the exact-matching
/// self-reduction; index i is the value after vertex i was fixed.
using ExactTrace = std::vector<u64>;

/// Vertex-labelling self-reduction on a fixed substitution. For each vertex
/// v, keep only its weight-1 edges if that leaves [y^k] pf nonzero, otherwise
/// only its weight-0 edges; then extract a perfect matching of the resulting
/// graph, all of whose perfect matchings weigh k.
std::optional<MatchingResult> reduce_exact(const SubstitutedTutte& st, std::size_t k, ExactTrace* trace = nullptr);

/// Perfect matching of weight exactly k. Throws UsageError unless
/// 0 <= k <= n/2.
MatchingOutcome find_exact_matching(const WeightedGraph& g, std::size_t k, SeededRng& rng,
                                    const PrimeModulus& modulus, int retries = 3);

}  // namespace algmatch
