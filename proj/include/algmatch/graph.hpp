#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <vector>

#include "algmatch/gf.hpp"
#include "algmatch/matrix.hpp"

namespace algmatch {

/// An edge {u, v} with u < v and weight w in {0, 1}. The triple is the edge's
/// identity: a weight-0 and a weight-1 edge may join the same pair.
struct Edge {
  std::size_t u;
  std::size_t v;
  int w;

  bool touches(std::size_t x) const { return u == x || v == x; }
  bool intersects(const Edge& o) const { return touches(o.u) || touches(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// G = G0 + G1 on vertices 0..n-1; integer order is the vertex order used by
/// the Tutte sign rule.
class WeightedGraph {
 public:
  /// Throws UsageError on a selfloop, an endpoint >= n, u > v, a weight outside
  /// {0, 1} or a repeated (u, v, w) triple.
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  bool contains(const Edge& e) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// delta_i(v): the weight-i edges touching v, in edge-list order.
std::vector<Edge> incident_by_weight(const WeightedGraph& g, std::size_t v, int weight);

/// Reads the edge-list format: "n m" then m lines "u v w"; '#' starts a
/// comment line, blank lines are skipped. Throws UsageError with a line number
/// on any violation.
WeightedGraph parse_graph(std::istream& in);

/// Whether substitute() checks p > 4 n^2.
enum class PrimeGuard { kEnforce, kUnchecked };

/// The Tutte pencil T~(G0) + y T~(G1) after substituting r_e for every x_e.
/// Deleting an edge substitutes 0 for it; the remaining values are kept.
class SubstitutedTutte {
 public:
  const SkewMatrix& t0() const { return t0_; }
  const SkewMatrix& t1() const { return t1_; }
  /// t0 + t1, the substituted Tutte matrix of the whole graph.
  FieldMatrix combined() const { return t0_.matrix() + t1_.matrix(); }

  const WeightedGraph& source() const { return source_; }
  const PrimeModulus& modulus() const { return t0_.matrix().modulus(); }

  /// Edges not yet deleted, in source order.
  std::vector<Edge> active_edges() const;
  bool is_active(const Edge& e) const { return values_.contains(e); }
  const std::map<Edge, u64>& assignment() const { return values_; }

  /// Active edges of weight i touching v.
  std::vector<Edge> incident_active(std::size_t v, int weight) const;

  friend SubstitutedTutte substitute_values(const WeightedGraph& g, std::span<const u64> values,
                                            const PrimeModulus& modulus);
  friend SubstitutedTutte delete_edges(const SubstitutedTutte& st, std::span<const Edge> edges);

 private:
  SubstitutedTutte(WeightedGraph source, SkewMatrix t0, SkewMatrix t1, std::map<Edge, u64> values)
      : source_(std::move(source)), t0_(std::move(t0)), t1_(std::move(t1)), values_(std::move(values)) {}

  WeightedGraph source_;
  SkewMatrix t0_;
  SkewMatrix t1_;
  std::map<Edge, u64> values_;
};

/// Draws one uniform r_e per edge, in edge-list order. With kEnforce, throws
/// UsageError unless p > 4 n^2.
SubstitutedTutte substitute(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus,
                            PrimeGuard guard = PrimeGuard::kEnforce);

/// Substitution with caller-supplied values, one per edge in edge-list order.
SubstitutedTutte substitute_values(const WeightedGraph& g, std::span<const u64> values,
                                   const PrimeModulus& modulus);

/// Copy of st with each listed edge's value replaced by 0. Edges already
/// deleted are accepted; edges outside the source graph throw UsageError.
SubstitutedTutte delete_edges(const SubstitutedTutte& st, std::span<const Edge> edges);

}  // namespace algmatch
