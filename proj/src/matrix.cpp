#include "algmatch/matrix.hpp"

#include <string>
#include <utility>

#include "algmatch/error.hpp"

namespace algmatch {

namespace {

std::string shape(const FieldMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const FieldMatrix& a, const char* op) {
  if (!a.is_square()) throw UsageError(std::string(op) + ": matrix is " + shape(a) + ", not square");
}

void swap_rows(FieldMatrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

void swap_cols(FieldMatrix& m, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, c1), m(i, c2));
}

}  // namespace

FieldMatrix FieldMatrix::identity(std::size_t n, const PrimeModulus& modulus) {
  FieldMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                   const PrimeModulus& modulus) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(rows.size(), cols, modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = modulus.reduce_signed(rows[i][j]);
  }
  return m;
}

FieldMatrix FieldMatrix::random(std::size_t rows, std::size_t cols, SeededRng& rng,
                                const PrimeModulus& modulus) {
  FieldMatrix m(rows, cols, modulus);
  for (auto& x : m.entries_) x = rng.uniform_below(modulus.value());
  return m;
}

bool FieldMatrix::is_zero() const {
  for (u64 x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

bool FieldMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if ((*this)(i, j) != modulus_.neg((*this)(j, i))) return false;
    }
  }
  return true;
}

void FieldMatrix::check_same_shape(const FieldMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw UsageError(std::string(op) + ": shapes " + shape(*this) + " and " + shape(o) + " differ");
  }
  if (!(modulus_ == o.modulus_)) throw UsageError(std::string(op) + ": matrices over different fields");
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  check_same_shape(o, "add");
  FieldMatrix out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = modulus_.add(entries_[k], o.entries_[k]);
  return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  check_same_shape(o, "sub");
  FieldMatrix out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = modulus_.sub(entries_[k], o.entries_[k]);
  return out;
}

FieldMatrix FieldMatrix::operator-() const {
  FieldMatrix out(*this);
  for (auto& x : out.entries_) x = modulus_.neg(x);
  return out;
}

FieldMatrix FieldMatrix::scaled(u64 c) const {
  FieldMatrix out(*this);
  for (auto& x : out.entries_) x = modulus_.mul(x, c);
  return out;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix out(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

SkewMatrix::SkewMatrix(FieldMatrix m) : m_(std::move(m)) {
  if (!m_.is_skew_symmetric()) throw UsageError("matrix is not skew-symmetric");
}

SkewMatrix SkewMatrix::from_upper(std::size_t n, std::span<const u64> upper,
                                  const PrimeModulus& modulus) {
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw UsageError("from_upper: expected " + std::to_string(n * (n > 0 ? n - 1 : 0) / 2) +
                     " entries");
  }
  FieldMatrix m(n, n, modulus);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      m(i, j) = modulus.reduce(upper[k]);
      m(j, i) = modulus.neg(m(i, j));
    }
  }
  return SkewMatrix(std::move(m));
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matmul: " + shape(a) + " times " + shape(b));
  if (!(a.modulus() == b.modulus())) throw UsageError("matmul: matrices over different fields");
  const PrimeModulus& mod = a.modulus();
  const u64 p = mod.value();
  FieldMatrix c(a.rows(), b.cols(), mod);
  // i-k-j order walks both b and c along rows.
  std::vector<u128> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const u64 aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        // Reduce per term: a sum of two 128-bit products could overflow.
        acc[j] = (acc[j] + static_cast<u128>(aik) * b(k, j)) % p;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<u64>(acc[j]);
  }
  return c;
}

FieldElement determinant(const FieldMatrix& a) {
  require_square(a, "determinant");
  const PrimeModulus& mod = a.modulus();
  const std::size_t n = a.rows();
  FieldMatrix m(a);
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return FieldElement(0, mod);
    if (pivot != col) {
      swap_rows(m, pivot, col);
      det = mod.neg(det);
    }
    const u64 pv = m(col, col);
    det = mod.mul(det, pv);
    const u64 pinv = mod.inv(pv);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const u64 factor = mod.mul(m(r, col), pinv);
      for (std::size_t j = col; j < n; ++j) m(r, j) = mod.sub(m(r, j), mod.mul(factor, m(col, j)));
    }
  }
  return FieldElement(det, mod);
}

DetInverse det_inv(const FieldMatrix& a) {
  require_square(a, "det_inv");
  const PrimeModulus& mod = a.modulus();
  const std::size_t n = a.rows();
  FieldMatrix m(a);
  FieldMatrix inv = FieldMatrix::identity(n, mod);
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return {FieldElement(0, mod), std::nullopt};
    if (pivot != col) {
      swap_rows(m, pivot, col);
      swap_rows(inv, pivot, col);
      det = mod.neg(det);
    }
    const u64 pv = m(col, col);
    det = mod.mul(det, pv);
    const u64 pinv = mod.inv(pv);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) = mod.mul(m(col, j), pinv);
      inv(col, j) = mod.mul(inv(col, j), pinv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const u64 factor = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) = mod.sub(m(r, j), mod.mul(factor, m(col, j)));
        inv(r, j) = mod.sub(inv(r, j), mod.mul(factor, inv(col, j)));
      }
    }
  }
  return {FieldElement(det, mod), std::move(inv)};
}

std::size_t rank(const FieldMatrix& a) {
  const PrimeModulus& mod = a.modulus();
  FieldMatrix m(a);
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    swap_rows(m, pivot, r);
    const u64 pinv = mod.inv(m(r, col));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const u64 factor = mod.mul(m(i, col), pinv);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = mod.sub(m(i, j), mod.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

Polynomial charpoly(const FieldMatrix& a) {
  require_square(a, "charpoly");
  const PrimeModulus& mod = a.modulus();
  const std::size_t n = a.rows();
  FieldMatrix h(a);

  // Hessenberg reduction. Each row operation R_i -= f R_{k+1} is paired with
  // the inverse column operation C_{k+1} += f C_i, so h stays similar to a.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t pivot = k + 1;
    while (pivot < n && h(pivot, k) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != k + 1) {
      swap_rows(h, pivot, k + 1);
      swap_cols(h, pivot, k + 1);
    }
    const u64 pinv = mod.inv(h(k + 1, k));
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h(i, k) == 0) continue;
      const u64 factor = mod.mul(h(i, k), pinv);
      for (std::size_t j = k; j < n; ++j) h(i, j) = mod.sub(h(i, j), mod.mul(factor, h(k + 1, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, k + 1) = mod.add(h(r, k + 1), mod.mul(factor, h(r, i)));
    }
  }

  // chi_m = (t - h_mm) chi_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) chi_{i-1}
  // with 1-based m; chi[m] below holds the 0-based leading minor of size m.
  std::vector<Polynomial> chi;
  chi.reserve(n + 1);
  chi.push_back(Polynomial::constant(1, mod));
  const Polynomial t = Polynomial::monomial(1, mod);
  for (std::size_t m = 0; m < n; ++m) {
    Polynomial next = (t - Polynomial::constant(h(m, m), mod)) * chi[m];
    u64 sub_diag = 1;
    for (std::size_t i = m; i-- > 0;) {
      sub_diag = mod.mul(sub_diag, h(i + 1, i));
      if (sub_diag == 0) break;
      const u64 coef = mod.mul(h(i, m), sub_diag);
      if (coef != 0) next = next - chi[i].scaled(coef);
    }
    chi.push_back(std::move(next));
  }
  return chi[n];
}

FieldElement pfaffian_scalar(const SkewMatrix& skew) {
  const std::size_t n = skew.size();
  const PrimeModulus& mod = skew.matrix().modulus();
  if (n % 2 != 0) throw UsageError("pfaffian of odd dimension " + std::to_string(n) + " is undefined");
  FieldMatrix m(skew.matrix());
  u64 pf = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t pivot = k + 1;
    while (pivot < n && m(k, pivot) == 0) ++pivot;
    if (pivot == n) return FieldElement(0, mod);
    if (pivot != k + 1) {
      // Congruence by a transposition flips the sign.
      swap_rows(m, pivot, k + 1);
      swap_cols(m, pivot, k + 1);
      pf = mod.neg(pf);
    }
    const u64 pv = m(k, k + 1);
    pf = mod.mul(pf, pv);
    const u64 pinv = mod.inv(pv);
    // Clear row k (and column k) beyond k+1 with unimodular congruences
    // R_j -= f R_{k+1}, C_j -= f C_{k+1}; only the trailing block matters next.
    for (std::size_t j = k + 2; j < n; ++j) {
      if (m(k, j) == 0) continue;
      const u64 factor = mod.mul(m(k, j), pinv);
      for (std::size_t c = k; c < n; ++c) m(j, c) = mod.sub(m(j, c), mod.mul(factor, m(k + 1, c)));
      for (std::size_t r = k; r < n; ++r) m(r, j) = mod.sub(m(r, j), mod.mul(factor, m(r, k + 1)));
    }
  }
  return FieldElement(pf, mod);
}

}  // namespace algmatch
