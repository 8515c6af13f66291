#include "algmatch/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "algmatch/error.hpp"

namespace algmatch::oracle {

namespace {

void extend_matching(const WeightedGraph& g, std::vector<bool>& covered, std::vector<Edge>& current,
                     MatchingEnumeration& out) {
  const auto first_free = std::find(covered.begin(), covered.end(), false);
  if (first_free == covered.end()) {
    out.matchings.push_back(current);
    int w = 0;
    for (const Edge& e : current) w += e.w;
    out.weights.insert(w);
    return;
  }
  const auto v = static_cast<std::size_t>(first_free - covered.begin());
  for (const Edge& e : g.edges()) {
    if (!e.touches(v)) continue;
    const std::size_t other = e.u == v ? e.v : e.u;
    if (covered[other]) continue;
    covered[v] = covered[other] = true;
    current.push_back(e);
    extend_matching(g, covered, current, out);
    current.pop_back();
    covered[v] = covered[other] = false;
  }
}

std::size_t inversions(const std::vector<std::size_t>& perm) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) count += perm[i] > perm[j] ? 1 : 0;
  }
  return count;
}

// Enumerates matchings of K_n in canonical order, accumulating the signed
// products into `sum`.
void expand_pfaffian(const SkewMatrix& a, std::vector<bool>& used, std::vector<std::size_t>& perm, u64& sum) {
  const PrimeModulus& mod = a.matrix().modulus();
  const auto first_free = std::find(used.begin(), used.end(), false);
  if (first_free == used.end()) {
    u64 term = 1;
    for (std::size_t i = 0; i < perm.size(); i += 2) term = mod.mul(term, a(perm[i], perm[i + 1]));
    sum = inversions(perm) % 2 == 0 ? mod.add(sum, term) : mod.sub(sum, term);
    return;
  }
  const auto i = static_cast<std::size_t>(first_free - used.begin());
  used[i] = true;
  for (std::size_t j = i + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    perm.push_back(i);
    perm.push_back(j);
    expand_pfaffian(a, used, perm, sum);
    perm.pop_back();
    perm.pop_back();
    used[j] = false;
  }
  used[i] = false;
}

void combinations(std::size_t total, std::size_t choose, std::size_t start, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == choose) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + (choose - current.size()) <= total; ++i) {
    current.push_back(i);
    combinations(total, choose, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

MatchingEnumeration enum_perfect_matchings(const WeightedGraph& g) {
  if (g.vertex_count() > kMaxMatchingVertices) {
    throw UsageError("enum_perfect_matchings: n = " + std::to_string(g.vertex_count()) + " exceeds " +
                     std::to_string(kMaxMatchingVertices));
  }
  MatchingEnumeration out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<bool> covered(g.vertex_count(), false);
  std::vector<Edge> current;
  extend_matching(g, covered, current, out);
  return out;
}

FieldElement brute_pfaffian(const SkewMatrix& a) {
  const std::size_t n = a.size();
  if (n % 2 != 0) throw UsageError("brute_pfaffian: odd dimension");
  if (n > kMaxPfaffianSize) throw UsageError("brute_pfaffian: n = " + std::to_string(n) + " too large");
  std::vector<bool> used(n, false);
  std::vector<std::size_t> perm;
  u64 sum = 0;
  if (n == 0) return FieldElement(1, a.matrix().modulus());
  expand_pfaffian(a, used, perm, sum);
  return FieldElement(sum, a.matrix().modulus());
}

FieldElement brute_determinant(const FieldMatrix& a) {
  if (!a.is_square()) throw UsageError("brute_determinant: not square");
  if (a.rows() > 8) throw UsageError("brute_determinant: too large");
  const PrimeModulus& mod = a.modulus();
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  u64 sum = 0;
  do {
    u64 term = 1;
    for (std::size_t i = 0; i < perm.size() && term != 0; ++i) term = mod.mul(term, a(i, perm[i]));
    sum = inversions(perm) % 2 == 0 ? mod.add(sum, term) : mod.sub(sum, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FieldElement(sum, mod);
}

std::vector<ParityBase> enum_parity_bases(const LmpInstance& inst) {
  if (inst.line_count() > kMaxLines || inst.dimension() > kMaxLmpDimension) {
    throw UsageError("enum_parity_bases: instance exceeds the enumeration guard");
  }
  std::vector<ParityBase> out;
  const std::size_t nv = inst.dimension();
  if (nv % 2 != 0) return out;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  combinations(inst.line_count(), nv / 2, 0, current, subsets);
  for (const auto& lines : subsets) {
    FieldMatrix cols(nv, nv, inst.modulus());
    for (std::size_t k = 0; k < lines.size(); ++k) {
      for (std::size_t i = 0; i < nv; ++i) {
        cols(i, 2 * k) = inst.z()(i, 2 * lines[k]);
        cols(i, 2 * k + 1) = inst.z()(i, 2 * lines[k] + 1);
      }
    }
    if (rank(cols) == nv) out.push_back({lines, inst.weight_of(lines)});
  }
  return out;
}

Polynomial interpolated_pencil_det(const SkewPencil& pencil) {
  const PrimeModulus& mod = pencil.modulus();
  std::vector<std::pair<FieldElement, FieldElement>> points;
  for (u64 a = 0; a <= pencil.size(); ++a) {
    points.emplace_back(FieldElement(a, mod), det_inv(pencil.at(a)).det);
  }
  return interpolate(points);
}

Polynomial interpolated_pencil_pfaffian(const SkewPencil& pencil) {
  const PrimeModulus& mod = pencil.modulus();
  std::vector<std::pair<FieldElement, FieldElement>> points;
  for (u64 a = 0; a <= pencil.size() / 2; ++a) {
    points.emplace_back(FieldElement(a, mod), brute_pfaffian(SkewMatrix(pencil.at(a))));
  }
  return interpolate(points);
}

std::vector<bool> feasible_weights(const WeightedGraph& g) {
  std::vector<bool> feasible(g.vertex_count() / 2 + 1, false);
  for (int w : enum_perfect_matchings(g).weights) feasible[static_cast<std::size_t>(w)] = true;
  return feasible;
}

}  // namespace algmatch::oracle
