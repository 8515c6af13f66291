#include "algmatch/lmp.hpp"

#include <sstream>
#include <string>

#include "algmatch/error.hpp"

namespace algmatch {

LmpInstance::LmpInstance(FieldMatrix z, std::vector<bool> line_weights)
    : z_(std::move(z)), line_weights_(std::move(line_weights)) {
  if (z_.cols() % 2 != 0) throw UsageError("LMP matrix has an odd number of columns");
  if (z_.cols() / 2 != line_weights_.size()) {
    throw UsageError("LMP instance has " + std::to_string(z_.cols() / 2) + " lines but " +
                     std::to_string(line_weights_.size()) + " weights");
  }
}

std::vector<u64> LmpInstance::line_column(std::size_t line, int which) const {
  std::vector<u64> col(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) col[i] = z_(i, 2 * line + static_cast<std::size_t>(which));
  return col;
}

int LmpInstance::weight_of(std::span<const std::size_t> lines) const {
  int w = 0;
  for (std::size_t l : lines) w += line_weight(l);
  return w;
}

SkewMatrix wedge(std::span<const u64> a, std::span<const u64> b, const PrimeModulus& modulus) {
  if (a.size() != b.size()) {
    throw UsageError("wedge: vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  FieldMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = modulus.sub(modulus.mul(a[i], b[j]), modulus.mul(b[i], a[j]));
    }
  }
  return SkewMatrix(std::move(m));
}

SubstitutedY build_y_values(const LmpInstance& inst, std::span<const u64> values) {
  if (values.size() != inst.line_count()) {
    throw UsageError("build_y: " + std::to_string(values.size()) + " values for " +
                     std::to_string(inst.line_count()) + " lines");
  }
  const PrimeModulus& mod = inst.modulus();
  const std::size_t n = inst.dimension();
  const FieldMatrix& z = inst.z();
  FieldMatrix y0(n, n, mod);
  FieldMatrix y1(n, n, mod);
  std::vector<u64> assignment(values.size());
  for (std::size_t l = 0; l < values.size(); ++l) {
    const u64 r = mod.reduce(values[l]);
    assignment[l] = r;
    if (r == 0) continue;
    FieldMatrix& target = inst.line_weight(l) == 0 ? y0 : y1;
    const std::size_t c1 = 2 * l;
    const std::size_t c2 = 2 * l + 1;
    // Accumulate r (z1 z2^T - z2 z1^T) directly; only the strict upper triangle
    // is computed and mirrored.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const u64 w = mod.sub(mod.mul(z(i, c1), z(j, c2)), mod.mul(z(i, c2), z(j, c1)));
        if (w == 0) continue;
        const u64 term = mod.mul(r, w);
        target(i, j) = mod.add(target(i, j), term);
        target(j, i) = mod.sub(target(j, i), term);
      }
    }
  }
  return SubstitutedY{SkewMatrix(std::move(y0)), SkewMatrix(std::move(y1)), std::move(assignment)};
}

SubstitutedY build_y(const LmpInstance& inst, SeededRng& rng) {
  std::vector<u64> values(inst.line_count());
  for (auto& r : values) r = rng.uniform_below(inst.modulus().value());
  return build_y_values(inst, values);
}

bool has_parity_base(const LmpInstance& inst, SeededRng& rng) {
  if (inst.dimension() % 2 != 0) return false;
  return !determinant(build_y(inst, rng).combined()).is_zero();
}

WeightProfile lmp_weight_profile(const LmpInstance& inst, SeededRng& rng, int retries) {
  return pencil_weight_profile([&] { return build_y(inst, rng).pencil(); }, inst.dimension(), inst.modulus(),
                               retries);
}

LmpInstance embed_matching(const WeightedGraph& g, const PrimeModulus& modulus) {
  FieldMatrix z(g.vertex_count(), 2 * g.edge_count(), modulus);
  std::vector<bool> weights;
  weights.reserve(g.edge_count());
  for (std::size_t l = 0; l < g.edge_count(); ++l) {
    const Edge& e = g.edges()[l];
    z(e.u, 2 * l) = 1;
    z(e.v, 2 * l + 1) = 1;
    weights.push_back(e.w == 1);
  }
  return LmpInstance(std::move(z), std::move(weights));
}

namespace {

bool columns_independent(const LmpInstance& inst, std::span<const std::size_t> lines) {
  FieldMatrix sub(inst.dimension(), 2 * lines.size(), inst.modulus());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    for (std::size_t i = 0; i < inst.dimension(); ++i) {
      sub(i, 2 * k) = inst.z()(i, 2 * lines[k]);
      sub(i, 2 * k + 1) = inst.z()(i, 2 * lines[k] + 1);
    }
  }
  return rank(sub) == 2 * lines.size();
}

}  // namespace

ParityBaseOutcome find_parity_base(const LmpInstance& inst, SeededRng& rng, int retries) {
  if (inst.dimension() % 2 != 0) return Infeasible{};
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::vector<u64> values(inst.line_count());
    for (auto& r : values) r = rng.uniform_below(inst.modulus().value());
    if (determinant(build_y_values(inst, values).combined()).is_zero()) {
      if (attempt == 0) return Infeasible{};
      continue;
    }
    for (std::size_t l = 0; l < values.size(); ++l) {
      const u64 saved = values[l];
      values[l] = 0;
      if (determinant(build_y_values(inst, values).combined()).is_zero()) values[l] = saved;
    }
    std::vector<std::size_t> survivors;
    for (std::size_t l = 0; l < values.size(); ++l) {
      if (values[l] != 0) survivors.push_back(l);
    }
    if (2 * survivors.size() == inst.dimension() && columns_independent(inst, survivors)) return survivors;
  }
  return Infeasible{true};
}

LmpInstance LmpFile::instance(const PrimeModulus& modulus) const {
  FieldMatrix z(dimension, columns.size(), modulus);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t i = 0; i < dimension; ++i) z(i, c) = modulus.reduce_signed(columns[c][i]);
  }
  return LmpInstance(std::move(z), line_weights);
}

LmpFile parse_lmp(std::istream& in) {
  // Flatten to tokens, remembering the line each came from.
  std::vector<std::pair<std::string, std::size_t>> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.emplace_back(tok, lineno);
  }

  std::size_t pos = 0;
  auto next_int = [&](const char* what) -> std::int64_t {
    if (pos >= tokens.size()) throw UsageError(std::string("unexpected end of LMP file, expected ") + what);
    const auto& [tok, ln] = tokens[pos++];
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("line " + std::to_string(ln) + ": expected " + what + ", got \"" + tok + "\"");
    return value;
  };

  const std::int64_t nv = next_int("vertex count");
  const std::int64_t m = next_int("line count");
  if (nv < 0 || m < 0) throw UsageError("LMP header counts must be non-negative");

  LmpFile file;
  file.dimension = static_cast<std::size_t>(nv);
  for (std::int64_t l = 0; l < m; ++l) {
    for (int which = 0; which < 2; ++which) {
      std::vector<std::int64_t> col(file.dimension);
      for (auto& x : col) x = next_int("column entry");
      file.columns.push_back(std::move(col));
    }
    const std::size_t at = pos < tokens.size() ? tokens[pos].second : lineno;
    const std::int64_t w = next_int("line weight");
    if (w != 0 && w != 1) throw UsageError("line " + std::to_string(at) + ": line weight must be 0 or 1");
    file.line_weights.push_back(w == 1);
  }
  if (pos != tokens.size()) {
    throw UsageError("line " + std::to_string(tokens[pos].second) + ": content after the last line");
  }
  return file;
}

}  // namespace algmatch
