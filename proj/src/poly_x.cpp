#include "qgen/poly_x.hpp"

#include <stdexcept>

namespace qgen {

PolyX::PolyX(RatFn constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

PolyX::PolyX(std::vector<RatFn> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyX PolyX::monomial(const RatFn& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<RatFn> coeffs(k + 1);
  coeffs[k] = c;
  return PolyX(std::move(coeffs));
}

PolyX PolyX::q_bracket_x() {
  const RatFn inv = RatFn(PolyQ{1, -1}).inverse();
  return PolyX(std::vector<RatFn>{inv, -inv});
}

void PolyX::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t PolyX::degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

RatFn PolyX::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : RatFn(); }

PolyX PolyX::subst_x(const RatFn& c, std::size_t k) const {
  if (coeffs_.empty()) return {};
  if (c.is_zero()) return PolyX(coeffs_.front());
  std::vector<RatFn> out((coeffs_.size() - 1) * k + 1);
  RatFn c_pow(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i * k] += coeffs_[i] * c_pow;
    c_pow *= c;
  }
  return PolyX(std::move(out));
}

RatFn PolyX::eval_int(std::size_t j) const {
  RatFn acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    acc += coeffs_[i] * RatFn::q_pow(i * j);
  }
  return acc;
}

RatFn PolyX::eval(const RatFn& x_value) const {
  RatFn acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x_value;
    acc += *it;
  }
  return acc;
}

PolyX PolyX::subst_qpow(std::size_t m) const {
  std::vector<RatFn> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.subst_qpow(m));
  return PolyX(std::move(out));
}

PolyX PolyX::pow(std::size_t exponent) const {
  PolyX result(RatFn(1));
  for (std::size_t i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

PolyX& PolyX::operator+=(const PolyX& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyX& PolyX::operator-=(const PolyX& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyX& PolyX::operator*=(const RatFn& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatFn> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyX(std::move(out));
}

PolyX PolyX::operator-() const {
  PolyX out = *this;
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

PolyX polyx_subst_x(const PolyX& p, const RatFn& c, std::size_t k) { return p.subst_x(c, k); }

RatFn polyx_eval_int(const PolyX& p, std::size_t j) { return p.eval_int(j); }

}  // namespace qgen
