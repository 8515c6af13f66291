#include "algmatch/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "algmatch/error.hpp"

namespace algmatch {

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << ' ' << e.v << ' ' << e.w; }

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::set<Edge> seen;
  for (const Edge& e : edges_) {
    std::ostringstream desc;
    desc << "edge (" << e << ")";
    if (e.u == e.v) throw UsageError(desc.str() + " is a selfloop");
    if (e.u > e.v) throw UsageError(desc.str() + " must list the smaller endpoint first");
    if (e.v >= n_) throw UsageError(desc.str() + " has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (e.w != 0 && e.w != 1) throw UsageError(desc.str() + " has weight outside {0, 1}");
    if (!seen.insert(e).second) throw UsageError(desc.str() + " appears twice");
  }
}

bool WeightedGraph::contains(const Edge& e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<Edge> incident_by_weight(const WeightedGraph& g, std::size_t v, int weight) {
  if (v >= g.vertex_count()) throw UsageError("vertex " + std::to_string(v) + " out of range");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (e.w == weight && e.touches(v)) out.push_back(e);
  }
  return out;
}

namespace {

// Next non-blank, non-comment line; false at end of input.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t lineno, const std::string& what) {
  throw UsageError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw UsageError("empty graph file");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) parse_error(lineno, "expected header \"n m\"");
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno)) {
      throw UsageError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream es(line);
    long long u = -1;
    long long v = -1;
    long long w = -1;
    std::string extra;
    if (!(es >> u >> v >> w) || (es >> extra)) parse_error(lineno, "expected \"u v w\"");
    if (!(0 <= u && u < v && v < n)) parse_error(lineno, "need 0 <= u < v < n");
    if (w != 0 && w != 1) parse_error(lineno, "weight must be 0 or 1");
    Edge e{static_cast<std::size_t>(u), static_cast<std::size_t>(v), static_cast<int>(w)};
    if (!seen.insert(e).second) parse_error(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (next_content_line(in, line, lineno)) parse_error(lineno, "content after the last edge");
  return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

SubstitutedTutte substitute_values(const WeightedGraph& g, std::span<const u64> values,
                                   const PrimeModulus& modulus) {
  if (values.size() != g.edge_count()) {
    throw UsageError("substitute: " + std::to_string(values.size()) + " values for " +
                     std::to_string(g.edge_count()) + " edges");
  }
  const std::size_t n = g.vertex_count();
  FieldMatrix t0(n, n, modulus);
  FieldMatrix t1(n, n, modulus);
  std::map<Edge, u64> assignment;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Edge& e = g.edges()[k];
    const u64 r = modulus.reduce(values[k]);
    FieldMatrix& target = e.w == 0 ? t0 : t1;
    target(e.u, e.v) = r;
    target(e.v, e.u) = modulus.neg(r);
    assignment.emplace(e, r);
  }
  return SubstitutedTutte(g, SkewMatrix(std::move(t0)), SkewMatrix(std::move(t1)), std::move(assignment));
}

SubstitutedTutte substitute(const WeightedGraph& g, SeededRng& rng, const PrimeModulus& modulus,
                            PrimeGuard guard) {
  const u64 n = g.vertex_count();
  if (guard == PrimeGuard::kEnforce && modulus.value() <= 4 * n * n) {
    throw UsageError("prime " + std::to_string(modulus.value()) + " too small for n = " + std::to_string(n) +
                     ": need p > 4n^2 = " + std::to_string(4 * n * n));
  }
  std::vector<u64> values(g.edge_count());
  for (auto& r : values) r = rng.uniform_below(modulus.value());
  return substitute_values(g, values, modulus);
}

std::vector<Edge> SubstitutedTutte::active_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : source_.edges()) {
    if (is_active(e)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> SubstitutedTutte::incident_active(std::size_t v, int weight) const {
  std::vector<Edge> out;
  for (const Edge& e : incident_by_weight(source_, v, weight)) {
    if (is_active(e)) out.push_back(e);
  }
  return out;
}

SubstitutedTutte delete_edges(const SubstitutedTutte& st, std::span<const Edge> edges) {
  FieldMatrix t0(st.t0_.matrix());
  FieldMatrix t1(st.t1_.matrix());
  std::map<Edge, u64> values(st.values_);
  for (const Edge& e : edges) {
    if (!st.source_.contains(e)) {
      std::ostringstream os;
      os << "delete_edges: edge (" << e << ") is not in the graph";
      throw UsageError(os.str());
    }
    FieldMatrix& target = e.w == 0 ? t0 : t1;
    target(e.u, e.v) = 0;
    target(e.v, e.u) = 0;
    values.erase(e);
  }
  return SubstitutedTutte(st.source_, SkewMatrix(std::move(t0)), SkewMatrix(std::move(t1)), std::move(values));
}

}  // namespace algmatch
