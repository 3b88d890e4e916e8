#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "qgen/poly_q.hpp"
#include "qgen/rat.hpp"

namespace qgen {

/// Polynomial in the real variable x with rational coefficients.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(PolyQ p) : p_(std::move(p)) {}
  explicit XPoly(std::vector<Rat> coefficients) : p_(std::move(coefficients)) {}

  static XPoly x() { return XPoly(PolyQ::q()); }

  bool is_zero() const { return p_.is_zero(); }
  std::size_t degree() const { return p_.degree(); }
  Rat coeff(std::size_t k) const { return p_.coeff(k); }
  std::span<const Rat> coefficients() const { return p_.coefficients(); }
  Rat eval(const Rat& x0) const { return p_.eval(x0); }
  /// p(1 - x).
  XPoly reflect() const;
  const PolyQ& as_poly() const { return p_; }

  friend XPoly operator+(const XPoly& a, const XPoly& b) { return XPoly(a.p_ + b.p_); }
  friend XPoly operator-(const XPoly& a, const XPoly& b) { return XPoly(a.p_ - b.p_); }
  friend XPoly operator*(const XPoly& a, const XPoly& b) { return XPoly(a.p_ * b.p_); }
  friend XPoly operator*(const Rat& c, const XPoly& a) { return XPoly(c * a.p_); }
  friend bool operator==(const XPoly&, const XPoly&) = default;

 private:
  PolyQ p_;
};

inline constexpr std::size_t kDefaultMemoCap = 64;

/// Memoized Euler and Bernoulli sequences. Indices below the cap are cached;
/// larger indices are computed on demand without caching. Safe to share
/// between threads.
class ClassicalTables {
 public:
  explicit ClassicalTables(std::size_t cap = kDefaultMemoCap) : cap_(cap) {}

  Rat euler(std::size_t n) const;
  Rat bernoulli(std::size_t n) const;
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::vector<Rat> euler_;
  mutable std::vector<Rat> bernoulli_;
};

/// E_n = E_n(0) for the generating function 2/(e^t + 1).
Rat euler_number(std::size_t n);
/// E_n(x) = sum_k C(n,k) E_k x^{n-k}.
XPoly euler_poly(std::size_t n);
/// Coefficients of 2t/(e^t + 1): G_0 = 0, G_n = n E_{n-1}.
Rat genocchi_number(std::size_t n);
XPoly genocchi_poly(std::size_t n);
/// Bernoulli numbers with B_1 = -1/2.
Rat bernoulli_number(std::size_t n);
/// Z_m(n) = 1^m - 2^m + ... + (-1)^{n+1} n^m.
Rat alt_power_sum(std::size_t m, std::size_t n);

}  // namespace qgen
