#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgen/rat_fn.hpp"

namespace qgen {

/// Polynomial in X = q^x with coefficients in Q(q). Every x-dependent
/// quantity in the q-families is of this shape: q^{lx} = X^l and
/// [x]_q = (1 - X)/(1 - q). Only nonnegative powers of X are representable.
class PolyX {
 public:
  PolyX() = default;
  PolyX(RatFn constant);  // NOLINT(google-explicit-constructor)
  explicit PolyX(std::vector<RatFn> coefficients);

  /// c * X^k.
  static PolyX monomial(const RatFn& c, std::size_t k);
  static PolyX x() { return monomial(1, 1); }
  /// [x]_q = (1 - X)/(1 - q).
  static PolyX q_bracket_x();

  bool is_zero() const { return coeffs_.empty(); }
  /// Precondition: nonzero.
  std::size_t degree() const;
  RatFn coeff(std::size_t k) const;
  std::span<const RatFn> coefficients() const { return coeffs_; }

  /// X -> c * X^k, collected and canonicalized.
  PolyX subst_x(const RatFn& c, std::size_t k) const;
  /// Value at x = j, i.e. X -> q^j.
  RatFn eval_int(std::size_t j) const;
  /// Value at an arbitrary X.
  RatFn eval(const RatFn& x_value) const;
  /// Applies q -> q^m to every coefficient; X is renamed to (q^m)^x.
  PolyX subst_qpow(std::size_t m) const;
  PolyX pow(std::size_t exponent) const;

  PolyX& operator+=(const PolyX& rhs);
  PolyX& operator-=(const PolyX& rhs);
  PolyX& operator*=(const RatFn& c);
  friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
  friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
  friend PolyX operator*(const PolyX& a, const PolyX& b);
  friend PolyX operator*(PolyX a, const RatFn& c) { return a *= c; }
  friend PolyX operator*(const RatFn& c, PolyX a) { return a *= c; }
  PolyX operator-() const;

  friend bool operator==(const PolyX&, const PolyX&) = default;

 private:
  void trim();
  std::vector<RatFn> coeffs_;
};

PolyX polyx_subst_x(const PolyX& p, const RatFn& c, std::size_t k);
RatFn polyx_eval_int(const PolyX& p, std::size_t j);

}  // namespace qgen
