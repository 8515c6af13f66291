#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <variant>
#include <vector>

#include "algmatch/gf.hpp"
#include "algmatch/graph.hpp"
#include "algmatch/matching.hpp"
#include "algmatch/matrix.hpp"

namespace algmatch {

/// A linear matroid parity instance: Z in F^{V x U} with |U| = 2m, where
/// columns 2l and 2l+1 form line l, and a 0/1 weight per line.
class LmpInstance {
 public:
  /// Throws UsageError if z has an odd column count or the weight list does
  /// not have one entry per line.
  LmpInstance(FieldMatrix z, std::vector<bool> line_weights);

  const FieldMatrix& z() const { return z_; }
  std::size_t dimension() const { return z_.rows(); }
  std::size_t line_count() const { return line_weights_.size(); }
  int line_weight(std::size_t line) const { return line_weights_[line] ? 1 : 0; }
  const std::vector<bool>& line_weights() const { return line_weights_; }
  const PrimeModulus& modulus() const { return z_.modulus(); }

  /// Column `which` (0 or 1) of the line.
  std::vector<u64> line_column(std::size_t line, int which) const;

  /// |W cap L1| for a set of lines.
  int weight_of(std::span<const std::size_t> lines) const;

 private:
  FieldMatrix z_;
  std::vector<bool> line_weights_;
};

/// a b^T - b a^T.
SkewMatrix wedge(std::span<const u64> a, std::span<const u64> b, const PrimeModulus& modulus);

/// Y(Z, L0) and Y(Z, L1) after substituting r_l for each x_l.
struct SubstitutedY {
  SkewMatrix y0;
  SkewMatrix y1;
  std::vector<u64> assignment;  // r_l per line

  SkewPencil pencil() const { return SkewPencil{y0, y1}; }
  FieldMatrix combined() const { return y0.matrix() + y1.matrix(); }
};

/// One uniform r_l per line, in line order.
SubstitutedY build_y(const LmpInstance& inst, SeededRng& rng);

/// Caller-supplied r_l, one per line; a zero value removes the line.
SubstitutedY build_y_values(const LmpInstance& inst, std::span<const u64> values);

/// One-sided Monte Carlo test for a parity base: det(Y) != 0 after one
/// substitution.
bool has_parity_base(const LmpInstance& inst, SeededRng& rng);

/// feasible[k] iff some parity base has exactly k weight-1 lines (w.h.p.).
WeightProfile lmp_weight_profile(const LmpInstance& inst, SeededRng& rng, int retries = 3);

/// Line l_e = (1_u, 1_v) per edge e = {u, v}, u < v, carrying e's weight.
LmpInstance embed_matching(const WeightedGraph& g, const PrimeModulus& modulus);

using ParityBaseOutcome = std::variant<std::vector<std::size_t>, Infeasible>;

/// Greedy line deletion on one substitution: a line whose removal keeps det(Y)
/// nonzero is dropped for good. The survivors are checked to number |V|/2
/// with independent columns.
ParityBaseOutcome find_parity_base(const LmpInstance& inst, SeededRng& rng, int retries = 3);

/// Parsed LMP file, before reduction into a field.
struct LmpFile {
  std::size_t dimension = 0;
  std::vector<std::vector<std::int64_t>> columns;  // 2m columns, each of length dimension
  std::vector<bool> line_weights;

  LmpInstance instance(const PrimeModulus& modulus) const;
};

/// Reads "nv m", then per line two rows of nv integers (the two columns) and
/// a weight in {0, 1}. Tokens may be spread over lines freely; '#' starts a
/// comment line.
LmpFile parse_lmp(std::istream& in);

}  // namespace algmatch
