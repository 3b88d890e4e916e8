#include "qgen/poly_q.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgen {

namespace {

using IntCoeffs = std::vector<mpz_class>;

void trim_int(IntCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Clears denominators: returns integer coefficients and the common
// denominator d with p = ints / d.
IntCoeffs clear_denominators(std::span<const Rat> coeffs, mpz_class& den) {
  den = 1;
  for (const Rat& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  IntCoeffs out;
  out.reserve(coeffs.size());
  for (const Rat& c : coeffs) {
    mpz_class v = den / c.raw().get_den();
    out.emplace_back(v * c.raw().get_num());
  }
  return out;
}

mpz_class content(const IntCoeffs& c) {
  mpz_class g = 0;
  for (const auto& v : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntCoeffs& c) {
  if (c.empty()) return;
  mpz_class g = content(c);
  if (c.back() < 0) g = -g;
  if (g != 1) {
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// Remainder of a by b up to a nonzero integer factor, kept small by dividing
// out the gcd of the two leading coefficients at every elimination step.
IntCoeffs pseudo_remainder(IntCoeffs a, const IntCoeffs& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  mpz_class g, fa, fb;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_gcd(g.get_mpz_t(), lb.get_mpz_t(), a.back().get_mpz_t());
    mpz_divexact(fa.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(fb.get_mpz_t(), a.back().get_mpz_t(), g.get_mpz_t());
    if (fa != 1) {
      for (auto& v : a) v *= fa;
    }
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= fb * b[i];
    trim_int(a);
  }
  return a;
}

}  // namespace

PolyQ::PolyQ(Rat constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

PolyQ::PolyQ(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyQ::PolyQ(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

PolyQ PolyQ::monomial(const Rat& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rat> coeffs(k + 1);
  coeffs[k] = c;
  return PolyQ(std::move(coeffs));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t PolyQ::degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

const Rat& PolyQ::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat PolyQ::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

Rat PolyQ::eval(const Rat& q0) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q0.raw();
    acc += it->raw();
  }
  return Rat(acc);
}

PolyQ PolyQ::subst_qpow(std::size_t m) const {
  if (m == 0) throw std::invalid_argument("base change exponent must be >= 1");
  if (m == 1 || coeffs_.size() <= 1) return *this;
  std::vector<Rat> out((coeffs_.size() - 1) * m + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
  return PolyQ(std::move(out));
}

PolyQ PolyQ::monic() const {
  if (coeffs_.empty()) return {};
  const Rat inv = Rat(1) / coeffs_.back();
  return *this * inv;
}

PolyQ PolyQ::pow(std::size_t exponent) const {
  PolyQ result(1);
  PolyQ base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Multiply over the integers and restore the denominator once.
  mpz_class da, db;
  const IntCoeffs ia = clear_denominators(a.coeffs_, da);
  const IntCoeffs ib = clear_denominators(b.coeffs_, db);
  IntCoeffs prod(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const mpz_class den = da * db;
  std::vector<Rat> out;
  out.reserve(prod.size());
  for (auto& v : prod) out.emplace_back(v, den);
  return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero() || a.degree() < b.degree()) return {PolyQ{}, a};
  const std::size_t db = b.degree();
  const Rat inv_lead = Rat(1) / b.leading();
  std::vector<Rat> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rat> quot(a.degree() - db + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rat& top = rem[k + db];
    if (top.is_zero()) continue;
    const Rat factor = top * inv_lead;
    quot[k] = factor;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= factor * b.coeff(i);
  }
  rem.resize(db);
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot;
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return PolyQ(1);

  mpz_class unused;
  IntCoeffs x = clear_denominators(a.coefficients(), unused);
  IntCoeffs y = clear_denominators(b.coefficients(), unused);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntCoeffs r = pseudo_remainder(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> out;
  out.reserve(x.size());
  for (auto& v : x) out.emplace_back(v, x.back());
  return PolyQ(std::move(out));
}

}  // namespace qgen
