#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "algmatch/gf.hpp"
#include "algmatch/poly.hpp"

namespace algmatch {

/// Dense row-major matrix over F_p. Entries are canonical raw values; use
/// element() when a FieldElement is wanted.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, const PrimeModulus& modulus)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0), modulus_(modulus) {}

  static FieldMatrix identity(std::size_t n, const PrimeModulus& modulus);

  /// Builds from signed integers, reducing mod p. Every row must have the same
  /// length.
  static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               const PrimeModulus& modulus);

  static FieldMatrix random(std::size_t rows, std::size_t cols, SeededRng& rng,
                            const PrimeModulus& modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const PrimeModulus& modulus() const { return modulus_; }

  u64 operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  u64& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  FieldElement element(std::size_t i, std::size_t j) const {
    return FieldElement((*this)(i, j), modulus_);
  }
  void set(std::size_t i, std::size_t j, u64 value) { (*this)(i, j) = modulus_.reduce(value); }

  std::span<const u64> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  bool is_zero() const;
  bool is_skew_symmetric() const;

  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator-() const;
  FieldMatrix scaled(u64 c) const;
  FieldMatrix transposed() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.modulus_ == b.modulus_ &&
           a.entries_ == b.entries_;
  }

 private:
  void check_same_shape(const FieldMatrix& o, const char* op) const;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<u64> entries_;
  PrimeModulus modulus_;
};

/// A square FieldMatrix with a_ij = -a_ji (so a zero diagonal), checked at
/// construction.
class SkewMatrix {
 public:
  explicit SkewMatrix(FieldMatrix m);
  static SkewMatrix zero(std::size_t n, const PrimeModulus& modulus) {
    return SkewMatrix(FieldMatrix(n, n, modulus));
  }

  /// Fills the strict upper triangle row by row from `upper` and mirrors it.
  static SkewMatrix from_upper(std::size_t n, std::span<const u64> upper, const PrimeModulus& modulus);

  const FieldMatrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  u64 operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.m_ == b.m_; }

 private:
  FieldMatrix m_;
};

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);

struct DetInverse {
  FieldElement det;
  std::optional<FieldMatrix> inverse;  // empty iff det == 0
};

/// Determinant and, when it is nonzero, the inverse via Gauss-Jordan
/// elimination on [A | I].
DetInverse det_inv(const FieldMatrix& a);

/// Determinant alone; cheaper than det_inv.
FieldElement determinant(const FieldMatrix& a);

std::size_t rank(const FieldMatrix& a);

/// det(tI - A): monic of degree n. Reduces A to upper Hessenberg form by
/// similarity, then runs the leading-minor recurrence.
Polynomial charpoly(const FieldMatrix& a);

/// Exact pfaffian with the sign of the canonical matching expansion. Throws
/// UsageError for odd dimension.
FieldElement pfaffian_scalar(const SkewMatrix& a);

}  // namespace algmatch
