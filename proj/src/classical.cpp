#include "qgen/classical.hpp"

namespace qgen {

namespace {

// (e^t + 1) F(t) = 2 gives E_0 = 1 and 2 E_n + sum_{k<n} C(n,k) E_k = 0.
void extend_euler(std::vector<Rat>& e, std::size_t n) {
  if (e.empty()) e.emplace_back(1);
  while (e.size() <= n) {
    const std::size_t k_max = e.size();
    Rat s;
    for (std::size_t k = 0; k < k_max; ++k) s += Rat(binomial(k_max, k), 1) * e[k];
    e.push_back(-s / Rat(2));
  }
}

// sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1.
void extend_bernoulli(std::vector<Rat>& b, std::size_t n) {
  if (b.empty()) b.emplace_back(1);
  while (b.size() <= n) {
    const std::size_t m = b.size();
    Rat s;
    for (std::size_t k = 0; k < m; ++k) s += Rat(binomial(m + 1, k), 1) * b[k];
    b.push_back(-s / Rat(static_cast<long>(m + 1)));
  }
}

const ClassicalTables& default_tables() {
  static const ClassicalTables tables;
  return tables;
}

XPoly binomial_transform(const std::vector<Rat>& seq, std::size_t n) {
  // sum_k C(n,k) s_k x^{n-k}
  std::vector<Rat> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = Rat(binomial(n, k), 1) * seq[k];
  return XPoly(std::move(coeffs));
}

}  // namespace

XPoly XPoly::reflect() const {
  const PolyQ one_minus_x{1, -1};
  PolyQ acc;
  const auto c = p_.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * one_minus_x + PolyQ(*it);
  return XPoly(acc);
}

Rat ClassicalTables::euler(std::size_t n) const {
  if (n >= cap_) {
    std::vector<Rat> e;
    extend_euler(e, n);
    return e[n];
  }
  std::lock_guard lock(mutex_);
  extend_euler(euler_, n);
  return euler_[n];
}

Rat ClassicalTables::bernoulli(std::size_t n) const {
  if (n >= cap_) {
    std::vector<Rat> b;
    extend_bernoulli(b, n);
    return b[n];
  }
  std::lock_guard lock(mutex_);
  extend_bernoulli(bernoulli_, n);
  return bernoulli_[n];
}

Rat euler_number(std::size_t n) { return default_tables().euler(n); }

XPoly euler_poly(std::size_t n) {
  std::vector<Rat> e;
  for (std::size_t k = 0; k <= n; ++k) e.push_back(euler_number(k));
  return binomial_transform(e, n);
}

Rat genocchi_number(std::size_t n) {
  if (n == 0) return 0;
  return Rat(static_cast<long>(n)) * euler_number(n - 1);
}

XPoly genocchi_poly(std::size_t n) {
  std::vector<Rat> g;
  for (std::size_t k = 0; k <= n; ++k) g.push_back(genocchi_number(k));
  return binomial_transform(g, n);
}

Rat bernoulli_number(std::size_t n) { return default_tables().bernoulli(n); }

Rat alt_power_sum(std::size_t m, std::size_t n) {
  mpz_class acc = 0, term;
  for (unsigned long j = 1; j <= n; ++j) {
    mpz_ui_pow_ui(term.get_mpz_t(), j, m);
    if (j % 2 == 1) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return Rat(acc, 1);
}

}  // namespace qgen
