#include "qgen/rat_fn.hpp"

#include <stdexcept>

namespace qgen {

namespace {

bool is_one(const PolyQ& p) { return p.is_constant() && !p.is_zero() && p.leading() == Rat(1); }

}  // namespace

RatFn::RatFn(PolyQ num) : num_(std::move(num)), den_(1) {}

RatFn RatFn::normalize(const PolyQ& num, const PolyQ& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return RatFn();
  if (den.is_constant()) return RatFn(num * (Rat(1) / den.leading()));
  const PolyQ g = poly_gcd(num, den);
  PolyQ n = is_one(g) ? num : exact_div(num, g);
  PolyQ d = is_one(g) ? den : exact_div(den, g);
  const Rat scale = Rat(1) / d.leading();
  return RatFn(n * scale, d * scale, true);
}

bool RatFn::is_canonical() const {
  if (den_.is_zero() || den_.leading() != Rat(1)) return false;
  if (num_.is_zero()) return is_one(den_);
  return is_one(poly_gcd(num_, den_));
}

Rat RatFn::eval(const Rat& q0) const {
  const Rat d = den_.eval(q0);
  if (d.is_zero()) throw std::domain_error("pole at q0");
  return num_.eval(q0) / d;
}

Rat RatFn::eval_at_one() const {
  const Rat d = den_.eval(1);
  if (d.is_zero()) throw std::domain_error("pole at q=1");
  return num_.eval(1) / d;
}

RatFn RatFn::subst_qpow(std::size_t m) const {
  // q -> q^m maps coprime polynomials to coprime polynomials and keeps the
  // leading coefficient, so no re-reduction is needed.
  return RatFn(num_.subst_qpow(m), den_.subst_qpow(m), true);
}

RatFn RatFn::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  // Powers of coprime polynomials stay coprime.
  return RatFn(num_.pow(static_cast<std::size_t>(exponent)), den_.pow(static_cast<std::size_t>(exponent)), true);
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  const Rat scale = Rat(1) / num_.leading();
  return RatFn(den_ * scale, num_ * scale, true);
}

RatFn& RatFn::operator+=(const RatFn& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (is_one(den_) && is_one(rhs.den_)) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    *this = normalize(num_ + rhs.num_, den_);
    return *this;
  }
  const PolyQ g = poly_gcd(den_, rhs.den_);
  const PolyQ b = exact_div(den_, g);
  const PolyQ d = exact_div(rhs.den_, g);
  PolyQ num = num_ * d + rhs.num_ * b;
  if (num.is_zero()) return *this = RatFn();
  PolyQ den = b * d * g;
  if (!g.is_constant()) {
    const PolyQ h = poly_gcd(num, g);
    if (!h.is_constant()) {
      num = exact_div(num, h);
      den = exact_div(den, h);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& rhs) { return *this += -rhs; }

RatFn& RatFn::operator*=(const RatFn& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFn();
  if (is_one(den_) && is_one(rhs.den_)) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  PolyQ a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  if (!d.is_constant()) {
    const PolyQ g1 = poly_gcd(a, d);
    if (!g1.is_constant()) {
      a = exact_div(a, g1);
      d = exact_div(d, g1);
    }
  }
  if (!b.is_constant()) {
    const PolyQ g2 = poly_gcd(c, b);
    if (!g2.is_constant()) {
      c = exact_div(c, g2);
      b = exact_div(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& rhs) { return *this *= rhs.inverse(); }

RatFn RatFn::operator-() const { return RatFn(-num_, den_, true); }

RatFn ratfn_arith(ArithOp op, const RatFn& a, const RatFn& b, long exponent) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
    case ArithOp::pow:
      return a.pow(exponent);
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

}  // namespace qgen
