#include "algmatch/poly.hpp"

#include <algorithm>
#include <sstream>

#include "algmatch/error.hpp"

namespace algmatch {

Polynomial::Polynomial(std::vector<u64> coeffs, const PrimeModulus& modulus)
    : coeffs_(std::move(coeffs)), modulus_(modulus) {
  for (auto& c : coeffs_) c = modulus_.reduce(c);
  normalize();
}

Polynomial Polynomial::monomial(std::size_t k, const PrimeModulus& modulus) {
  std::vector<u64> c(k + 1, 0);
  c[k] = 1;
  return Polynomial(std::move(c), modulus);
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& o) const {
  if (!(modulus_ == o.modulus_)) throw UsageError("polynomials over different fields mixed");
}

u64 Polynomial::eval_raw(u64 a) const {
  a = modulus_.reduce(a);
  u64 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = modulus_.add(modulus_.mul(acc, a), *it);
  }
  return acc;
}

FieldElement Polynomial::eval(const FieldElement& a) const {
  if (!(a.modulus() == modulus_)) throw UsageError("evaluation point from a different field");
  return FieldElement(eval_raw(a.value()), modulus_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_field(o);
  std::vector<u64> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = modulus_.add(coeff(i), o.coeff(i));
  return Polynomial(std::move(out), modulus_);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_field(o);
  std::vector<u64> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = modulus_.sub(coeff(i), o.coeff(i));
  return Polynomial(std::move(out), modulus_);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_field(o);
  if (is_zero() || o.is_zero()) return Polynomial(modulus_);
  std::vector<u64> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = modulus_.add(out[i + j], modulus_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Polynomial(std::move(out), modulus_);
}

Polynomial Polynomial::operator-() const {
  std::vector<u64> out(coeffs_);
  for (auto& c : out) c = modulus_.neg(c);
  return Polynomial(std::move(out), modulus_);
}

Polynomial Polynomial::scaled(u64 c) const {
  std::vector<u64> out(coeffs_);
  for (auto& x : out) x = modulus_.mul(x, c);
  return Polynomial(std::move(out), modulus_);
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  if (is_zero()) {
    os << -1;
    return os.str();
  }
  os << *degree();
  for (u64 c : coeffs_) os << ' ' << c;
  return os.str();
}

Polynomial interpolate(std::span<const std::pair<FieldElement, FieldElement>> points) {
  if (points.empty()) throw UsageError("interpolate: no points");
  const PrimeModulus mod = points.front().first.modulus();
  for (const auto& [x, y] : points) {
    if (!(x.modulus() == mod) || !(y.modulus() == mod)) {
      throw UsageError("interpolate: points from different fields");
    }
  }
  const std::size_t count = points.size();

  // master(y) = prod (y - x_i)
  std::vector<u64> master{1};
  for (const auto& pt : points) {
    const u64 xi = pt.first.value();
    std::vector<u64> next(master.size() + 1, 0);
    for (std::size_t j = 0; j < master.size(); ++j) {
      next[j + 1] = mod.add(next[j + 1], master[j]);
      next[j] = mod.sub(next[j], mod.mul(master[j], xi));
    }
    master = std::move(next);
  }

  std::vector<u64> result(count, 0);
  std::vector<u64> basis(count);
  for (std::size_t i = 0; i < count; ++i) {
    const u64 xi = points[i].first.value();
    // basis = master / (y - x_i) by synthetic division, high to low.
    u64 carry = 0;
    for (std::size_t j = count; j-- > 0;) {
      carry = mod.add(master[j + 1], mod.mul(carry, xi));
      basis[j] = carry;
    }
    u64 denom = 0;
    for (std::size_t j = count; j-- > 0;) denom = mod.add(mod.mul(denom, xi), basis[j]);
    if (denom == 0) throw UsageError("interpolate: repeated abscissa " + std::to_string(xi));
    const u64 scale = mod.mul(points[i].second.value(), mod.inv(denom));
    for (std::size_t j = 0; j < count; ++j) result[j] = mod.add(result[j], mod.mul(basis[j], scale));
  }
  return Polynomial(std::move(result), mod);
}

Polynomial taylor_shift(const Polynomial& f, const FieldElement& c) {
  const PrimeModulus& mod = f.modulus();
  if (!(c.modulus() == mod)) throw UsageError("taylor_shift: shift from a different field");
  if (f.is_zero()) return f;
  const std::size_t d = *f.degree();

  // g_j = sum_{i >= j} f_i * C(i, j) * c^(i-j), binomials via Pascal rows.
  std::vector<u64> powers(d + 1, 1);
  for (std::size_t i = 1; i <= d; ++i) powers[i] = mod.mul(powers[i - 1], c.value());

  std::vector<u64> out(d + 1, 0);
  std::vector<u64> row{1};
  for (std::size_t i = 0; i <= d; ++i) {
    if (i > 0) {
      std::vector<u64> next(i + 1, 1);
      for (std::size_t j = 1; j < i; ++j) next[j] = mod.add(row[j - 1], row[j]);
      row = std::move(next);
    }
    const u64 fi = f.coeff(i);
    if (fi == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      out[j] = mod.add(out[j], mod.mul(fi, mod.mul(row[j], powers[i - j])));
    }
  }
  return Polynomial(std::move(out), mod);
}

Polynomial reverse(const Polynomial& f, std::size_t n) {
  if (f.degree() && *f.degree() > n) {
    throw UsageError("reverse: degree " + std::to_string(*f.degree()) + " exceeds bound " +
                     std::to_string(n));
  }
  std::vector<u64> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) out[i] = f.coeff(n - i);
  return Polynomial(std::move(out), f.modulus());
}

std::optional<Polynomial> poly_sqrt(const Polynomial& d) {
  const PrimeModulus& mod = d.modulus();
  if (d.is_zero()) return d;
  const std::size_t deg = *d.degree();
  if (deg % 2 != 0) return std::nullopt;
  const std::size_t half = deg / 2;

  auto lead = mod.sqrt(d.coeff(deg));
  if (!lead) return std::nullopt;

  // Match coefficients of f^2 from y^deg downwards; the y^(half+j) equation is
  // linear in f_j once f_{j+1..half} are known.
  std::vector<u64> f(half + 1, 0);
  f[half] = *lead;
  const u64 inv_two_lead = mod.inv(mod.add(*lead, *lead));
  for (std::size_t j = half; j-- > 0;) {
    const std::size_t target = half + j;
    u64 known = 0;
    for (std::size_t a = j + 1; a < half; ++a) {
      const std::size_t b = target - a;
      if (b <= j || b >= half) continue;
      known = mod.add(known, mod.mul(f[a], f[b]));
    }
    f[j] = mod.mul(mod.sub(d.coeff(target), known), inv_two_lead);
  }

  Polynomial root(std::move(f), mod);
  if (!(root * root == d)) return std::nullopt;
  return root;
}

}  // namespace algmatch
