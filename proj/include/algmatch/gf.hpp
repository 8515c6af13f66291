#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>

namespace algmatch {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Explicitly seeded source of randomness. Every randomized routine takes one
/// of these by reference; nothing in the library draws from global state.
/// Not thread-safe: each thread owns its own generator.
class SeededRng {
 public:
  explicit SeededRng(u64 seed = 0) : engine_(seed) {}

  u64 next_u64() { return engine_(); }

  /// Uniform integer in [0, bound), by rejection on the full 64-bit range so
  /// that no residue is favoured. bound must be positive.
  u64 uniform_below(u64 bound);

 private:
  std::mt19937_64 engine_;
};

/// An odd prime p < 2^64 together with the data Tonelli-Shanks needs.
/// Raw arithmetic works on canonical representatives in [0, p).
class PrimeModulus {
 public:
  /// Throws UsageError unless p is an odd prime.
  explicit PrimeModulus(u64 p);

  /// Smallest prime strictly greater than bound.
  static PrimeModulus smallest_above(u64 bound);

  /// Default prime for an instance with n vertices: the smallest prime above
  /// max(2^20, 4 n^3).
  static PrimeModulus default_for(std::size_t n);

  u64 value() const { return p_; }

  u64 reduce(u64 a) const { return a % p_; }
  u64 reduce_signed(std::int64_t a) const;

  u64 add(u64 a, u64 b) const { return a >= p_ - b ? a - (p_ - b) : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
  u64 pow(u64 base, u64 exp) const;

  /// Throws DivisionByZero for a == 0.
  u64 inv(u64 a) const;

  /// A square root of a, or nullopt if a is a non-residue.
  std::optional<u64> sqrt(u64 a) const;

  /// Euler's criterion, returns a^((p-1)/2) (0, 1 or p-1).
  u64 legendre(u64 a) const { return pow(a, (p_ - 1) / 2); }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) { return a.p_ == b.p_; }

 private:
  u64 p_;
  // p - 1 = odd_part * 2^two_adicity
  u64 odd_part_ = 0;
  unsigned two_adicity_ = 0;
  u64 non_residue_ = 0;
};

/// An element of F_p: a canonical value and its governing modulus. Mixing
/// elements of different fields throws UsageError.
class FieldElement {
 public:
  FieldElement(u64 value, const PrimeModulus& modulus)
      : value_(modulus.reduce(value)), modulus_(modulus) {}

  static FieldElement from_signed(std::int64_t value, const PrimeModulus& modulus) {
    return FieldElement(modulus.reduce_signed(value), modulus);
  }

  u64 value() const { return value_; }
  const PrimeModulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return FieldElement(modulus_.neg(value_), modulus_); }

  /// Throws DivisionByZero on zero.
  FieldElement inv() const { return FieldElement(modulus_.inv(value_), modulus_); }

  std::optional<FieldElement> sqrt() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

 private:
  void check_same_field(const FieldElement& o) const;

  u64 value_;
  PrimeModulus modulus_;
};

/// Uniform over all of F_p.
FieldElement sample_uniform(SeededRng& rng, const PrimeModulus& modulus);

}  // namespace algmatch
