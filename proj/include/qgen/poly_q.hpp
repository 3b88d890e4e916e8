#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "qgen/rat.hpp"

namespace qgen {

/// Dense univariate polynomial in q over the rationals. Coefficient i is the
/// coefficient of q^i. There are no trailing zeros, so the zero polynomial
/// has no coefficients at all and no degree.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(Rat constant);  // NOLINT(google-explicit-constructor)
  PolyQ(long constant) : PolyQ(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit PolyQ(std::vector<Rat> coefficients);
  PolyQ(std::initializer_list<long> coefficients);

  /// c * q^k.
  static PolyQ monomial(const Rat& c, std::size_t k);
  static PolyQ q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Precondition: nonzero. Throws std::logic_error on the zero polynomial.
  std::size_t degree() const;
  const Rat& leading() const;
  /// Coefficient of q^k (zero beyond the degree).
  Rat coeff(std::size_t k) const;
  std::span<const Rat> coefficients() const { return coeffs_; }

  Rat eval(const Rat& q0) const;
  /// q -> q^m.
  PolyQ subst_qpow(std::size_t m) const;
  PolyQ monic() const;
  PolyQ pow(std::size_t exponent) const;

  PolyQ& operator+=(const PolyQ& rhs);
  PolyQ& operator-=(const PolyQ& rhs);
  PolyQ& operator*=(const Rat& c);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rat& c) { return a *= c; }
  friend PolyQ operator*(const Rat& c, PolyQ a) { return a *= c; }
  PolyQ operator-() const;

  friend bool operator==(const PolyQ&, const PolyQ&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder of a by a nonzero b.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Exact quotient; throws std::domain_error if b does not divide a.
PolyQ exact_div(const PolyQ& a, const PolyQ& b);

/// Monic greatest common divisor. Throws std::domain_error("gcd undefined")
/// when both arguments are zero.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

}  // namespace qgen
