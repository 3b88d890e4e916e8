#pragma once

#include <cstddef>

#include "qgen/poly_q.hpp"
#include "qgen/rat.hpp"

namespace qgen {

/// Element of Q(q) in canonical form: num/den with gcd(num, den) = 1, den
/// monic, and zero stored as 0/1. Two RatFn are equal exactly when their
/// representations are identical.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(PolyQ num);  // NOLINT(google-explicit-constructor)
  RatFn(const Rat& c) : RatFn(PolyQ(c)) {}  // NOLINT(google-explicit-constructor)
  RatFn(long c) : RatFn(PolyQ(c)) {}  // NOLINT(google-explicit-constructor)

  /// Canonical reduction of num/den. Throws std::domain_error("division by
  /// zero polynomial") when den is zero.
  static RatFn normalize(const PolyQ& num, const PolyQ& den);

  static RatFn q() { return RatFn(PolyQ::q()); }
  /// q^k.
  static RatFn q_pow(std::size_t k) { return RatFn(PolyQ::monomial(1, k)); }

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Exact value at q0. Throws std::domain_error("pole at q0") when the
  /// reduced denominator vanishes there.
  Rat eval(const Rat& q0) const;
  /// q -> 1 limit: the reduced form evaluated at q = 1. Throws
  /// std::domain_error("pole at q=1") when the singularity is genuine.
  Rat eval_at_one() const;
  /// q -> q^m.
  RatFn subst_qpow(std::size_t m) const;
  RatFn pow(long exponent) const;
  RatFn inverse() const;

  RatFn& operator+=(const RatFn& rhs);
  RatFn& operator-=(const RatFn& rhs);
  RatFn& operator*=(const RatFn& rhs);
  RatFn& operator/=(const RatFn& rhs);
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  RatFn operator-() const;

  friend bool operator==(const RatFn&, const RatFn&) = default;

  /// True when the stored form satisfies every canonical-form invariant.
  bool is_canonical() const;

 private:
  RatFn(PolyQ num, PolyQ den, bool /*already_reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  PolyQ num_;
  PolyQ den_;
};

enum class ArithOp { add, sub, mul, div, pow };

/// Dispatches field arithmetic by operator tag. For ArithOp::pow the
/// exponent argument is used and b is ignored.
RatFn ratfn_arith(ArithOp op, const RatFn& a, const RatFn& b, long exponent = 0);

}  // namespace qgen
