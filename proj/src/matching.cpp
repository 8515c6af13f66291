#include "algmatch/matching.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "algmatch/error.hpp"

namespace algmatch {

SkewPencil pencil_of(const SubstitutedTutte& st) { return SkewPencil{st.t0(), st.t1()}; }

std::optional<Polynomial> det_pencil_at(const SkewPencil& pencil, u64 shift) {
  const PrimeModulus& mod = pencil.modulus();
  const std::size_t n = pencil.size();
  shift = mod.reduce(shift);
  auto [det_a, inverse] = det_inv(pencil.at(shift));
  if (!inverse) return std::nullopt;

  // With s = y - shift and t = 1/s:
  //   det(C + yL) = det(A + sL) = s^n det(A) det(tI + A^{-1} L),
  // and det(tI + A^{-1} L) is the characteristic polynomial of -A^{-1} L.
  const FieldMatrix m = -matmul(*inverse, pencil.linear.matrix());
  const Polynomial in_t = charpoly(m);
  const Polynomial in_s = reverse(in_t, n);
  const Polynomial in_y = taylor_shift(in_s, FieldElement(mod.neg(shift), mod));
  return in_y.scaled(det_a.value());
}

Polynomial det_pencil(const SkewPencil& pencil) {
  auto d = det_pencil_at(pencil, 1);
  if (!d) throw UsageError("det_pencil: constant + linear is singular");
  return *d;
}

Polynomial det_pencil(const SubstitutedTutte& st) { return det_pencil(pencil_of(st)); }

Polynomial pencil_determinant(const SkewPencil& pencil) {
  const PrimeModulus& mod = pencil.modulus();
  // Over a field smaller than n+2 the scan can only cover p-1 points.
  const u64 last = std::min<u64>(pencil.size() + 1, mod.value() - 1);
  for (u64 shift = 1; shift <= last; ++shift) {
    if (auto d = det_pencil_at(pencil, shift)) return *d;
  }
  return Polynomial(mod);
}

namespace {

Polynomial checked_sqrt(const Polynomial& det) {
  auto root = poly_sqrt(det);
  if (!root) {
    throw InternalError("determinant of a skew pencil is not a perfect square: " + det.to_string());
  }
  return *root;
}

}  // namespace

Polynomial pf_pencil(const SkewPencil& pencil) { return checked_sqrt(det_pencil(pencil)); }

Polynomial pf_pencil(const SubstitutedTutte& st) { return pf_pencil(pencil_of(st)); }

Polynomial pencil_pfaffian(const SkewPencil& pencil) { return checked_sqrt(pencil_determinant(pencil)); }

bool WeightProfile::any() const { return std::find(feasible.begin(), feasible.end(), true) != feasible.end(); }

std::string WeightProfile::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < feasible.size(); ++k) {
    if (k > 0) os << ' ';
    os << "k=" << k << ':' << (feasible[k] ? 1 : 0);
  }
  return os.str();
}

WeightProfile pencil_weight_profile(const std::function<SkewPencil()>& draw, std::size_t dimension,
                                    const PrimeModulus& modulus, int retries) {
  WeightProfile profile{std::vector<bool>(dimension / 2 + 1, false), Polynomial(modulus), 0};
  if (dimension % 2 != 0) return profile;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const SkewPencil pencil = draw();
    ++profile.trials;
    auto det = det_pencil_at(pencil, 1);
    if (!det) continue;
    profile.pf_poly = checked_sqrt(*det);
    for (std::size_t k = 0; k < profile.feasible.size(); ++k) profile.feasible[k] = profile.pf_poly.coeff(k) != 0;
    return profile;
  }
  return profile;
}

bool is_perfect_matching(const WeightedGraph& g, std::span<const Edge> edges) {
  std::vector<bool> covered(g.vertex_count(), false);
  std::set<Edge> used;
  for (const Edge& e : edges) {
    if (!g.contains(e) || !used.insert(e).second) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool has_perfect_matching(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus, PrimeGuard guard) {
  if (g.vertex_count() % 2 != 0) return false;
  const SubstitutedTutte st = substitute(g, rng, modulus, guard);
  return !determinant(st.combined()).is_zero();
}

std::optional<MatchingResult> extract_perfect_matching(const SubstitutedTutte& st) {
  if (determinant(st.combined()).is_zero()) return std::nullopt;
  SubstitutedTutte current = st;
  MatchingResult result;
  for (const Edge& e : st.source().edges()) {
    if (!current.is_active(e)) continue;
    const Edge single[] = {e};
    SubstitutedTutte without = delete_edges(current, single);
    if (!determinant(without.combined()).is_zero()) {
      current = std::move(without);
      continue;
    }
    // Every surviving matching uses e: keep it and drop its neighbours.
    std::vector<Edge> neighbours;
    for (const Edge& f : current.active_edges()) {
      if (f != e && f.intersects(e)) neighbours.push_back(f);
    }
    current = delete_edges(current, neighbours);
    result.edges.push_back(e);
    result.weight += e.w;
  }
  if (!is_perfect_matching(st.source(), result.edges)) return std::nullopt;
  return result;
}

MatchingOutcome find_perfect_matching(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus,
                                      int retries) {
  if (g.vertex_count() % 2 != 0) return Infeasible{};
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const SubstitutedTutte st = substitute(g, rng, modulus);
    if (determinant(st.combined()).is_zero()) {
      // The first test is the existence verdict; a later zero means this
      // retry drew an unlucky substitution.
      if (attempt == 0) return Infeasible{};
      continue;
    }
    if (auto m = extract_perfect_matching(st)) return *m;
  }
  return Infeasible{true};
}

WeightProfile weight_profile(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus, int retries) {
  return pencil_weight_profile([&] { return pencil_of(substitute(g, rng, modulus)); }, g.vertex_count(), modulus,
                               retries);
}

std::optional<MatchingResult> reduce_exact(const SubstitutedTutte& st, std::size_t k, ExactTrace* trace) {
  if (pencil_pfaffian(pencil_of(st)).coeff(k) == 0) return std::nullopt;
  SubstitutedTutte current = st;
  for (std::size_t v = 0; v < st.source().vertex_count(); ++v) {
    const std::vector<Edge> light = current.incident_active(v, 0);
    SubstitutedTutte heavy_only = delete_edges(current, light);
    const u64 heavy_coeff = pencil_pfaffian(pencil_of(heavy_only)).coeff(k);
    if (heavy_coeff != 0) {
      current = std::move(heavy_only);
      if (trace) trace->push_back(heavy_coeff);
    } else {
      current = delete_edges(current, current.incident_active(v, 1));
      if (trace) trace->push_back(pencil_pfaffian(pencil_of(current)).coeff(k));
    }
  }
  auto m = extract_perfect_matching(current);
  if (!m || m->weight != static_cast<int>(k)) return std::nullopt;
  return m;
}

MatchingOutcome find_exact_matching(const WeightedGraph& g, std::size_t k, SeededRng& rng,
                                    const PrimeModulus& modulus, int retries) {
  const std::size_t n = g.vertex_count();
  if (k > n / 2) {
    throw UsageError("target weight " + std::to_string(k) + " outside 0.." + std::to_string(n / 2));
  }
  if (n % 2 != 0) return Infeasible{};
  const WeightProfile profile = weight_profile(g, rng, modulus, retries);
  if (!profile.feasible[k]) return Infeasible{};
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const SubstitutedTutte st = substitute(g, rng, modulus);
    if (auto m = reduce_exact(st, k)) return *m;
  }
  return Infeasible{true};
}

}  // namespace algmatch
