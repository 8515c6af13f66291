#include "algmatch/gf.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "algmatch/error.hpp"

namespace algmatch {

namespace {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % m);
    base = static_cast<u64>(static_cast<u128>(base) * base % m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  // These twelve bases are a deterministic witness set below 3.3e24.
  constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = static_cast<u64>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 SeededRng::uniform_below(u64 bound) {
  if (bound == 0) throw UsageError("uniform_below: bound must be positive");
  // Largest multiple of bound representable in 64 bits; reject draws above it.
  const u64 max = std::numeric_limits<u64>::max();
  const u64 limit = max - (max % bound + 1) % bound;
  u64 x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
  if (p == 2 || !is_prime(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not an odd prime");
  }
  odd_part_ = p - 1;
  while ((odd_part_ & 1) == 0) {
    odd_part_ >>= 1;
    ++two_adicity_;
  }
  // Random non-residue search; half of F_p^* qualifies, so this ends quickly.
  // The generator is seeded from p so the modulus stays a pure value.
  SeededRng rng(p);
  do {
    non_residue_ = 2 + rng.uniform_below(p - 2);
  } while (legendre(non_residue_) != p - 1);
}

PrimeModulus PrimeModulus::smallest_above(u64 bound) {
  u64 candidate = bound < 2 ? 3 : bound + 1;
  if (candidate % 2 == 0) ++candidate;
  while (!is_prime(candidate)) {
    if (candidate > std::numeric_limits<u64>::max() - 2) {
      throw UsageError("no 64-bit prime above " + std::to_string(bound));
    }
    candidate += 2;
  }
  return PrimeModulus(candidate);
}

PrimeModulus PrimeModulus::default_for(std::size_t n) {
  const u64 cube = 4 * static_cast<u64>(n) * n * n;
  return smallest_above(std::max<u64>(u64{1} << 20, cube));
}

u64 PrimeModulus::reduce_signed(std::int64_t a) const {
  if (a >= 0) return static_cast<u64>(a) % p_;
  // -(a+1) avoids overflow at INT64_MIN.
  const u64 magnitude = static_cast<u64>(-(a + 1)) + 1;
  return neg(magnitude % p_);
}

u64 PrimeModulus::pow(u64 base, u64 exp) const { return pow_mod(base, exp, p_); }

u64 PrimeModulus::inv(u64 a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::optional<u64> PrimeModulus::sqrt(u64 a) const {
  a %= p_;
  if (a == 0) return u64{0};
  if (legendre(a) != 1) return std::nullopt;

  // Tonelli-Shanks.
  unsigned m = two_adicity_;
  u64 c = pow(non_residue_, odd_part_);
  u64 t = pow(a, odd_part_);
  u64 root = pow(a, (odd_part_ + 1) / 2);
  while (t != 1) {
    unsigned i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    u64 b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    root = mul(root, b);
  }
  return root;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!(modulus_ == o.modulus_)) {
    throw UsageError("field elements from F_" + std::to_string(modulus_.value()) + " and F_" +
                     std::to_string(o.modulus_.value()) + " mixed");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(modulus_.add(value_, o.value_), modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(modulus_.sub(value_, o.value_), modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(modulus_.mul(value_, o.value_), modulus_);
}

std::optional<FieldElement> FieldElement::sqrt() const {
  auto root = modulus_.sqrt(value_);
  if (!root) return std::nullopt;
  return FieldElement(*root, modulus_);
}

FieldElement sample_uniform(SeededRng& rng, const PrimeModulus& modulus) {
  return FieldElement(rng.uniform_below(modulus.value()), modulus);
}

}  // namespace algmatch
