#include "qgen/oracle.hpp"

#include <stdexcept>

namespace qgen {

namespace {

struct SeriesShape {
  Rat prefactor;        // constant in front of the sum
  bool alternating;     // (-1)^l
  std::size_t power;    // exponent of [l+x]_q
  std::size_t x;        // argument shift
  bool weight_has_x;    // weight q^{l+x} instead of q^l
};

void check_domain(const Rat& q0, const Rat& tol) {
  if (q0 <= Rat(0) || q0 >= Rat(1)) throw std::invalid_argument("oracle requires rational q in (0,1)");
  if (tol <= Rat(0)) throw std::invalid_argument("oracle tolerance must be positive");
}

// Least L with |prefactor| q^L (1-q)^{-(power+1)} <= tol, and that bound.
std::pair<std::size_t, Rat> truncation(const SeriesShape& s, const Rat& q0, const Rat& tol) {
  const Rat scale = s.prefactor.abs() * (Rat(1) - q0).pow(-static_cast<long>(s.power + 1));
  Rat q_pow_l(1);
  std::size_t l = 0;
  while (scale * q_pow_l > tol) {
    q_pow_l *= q0;
    ++l;
  }
  return {l, scale * q_pow_l};
}

// Signed l-th term of the sum, without the prefactor.
Rat series_term(const SeriesShape& s, const Rat& q0, std::size_t l) {
  const Rat q_l = q0.pow(static_cast<long>(l));
  const Rat q_lx = q_l * q0.pow(static_cast<long>(s.x));
  const Rat bracket = (Rat(1) - q_lx) / (Rat(1) - q0);
  Rat term = bracket.pow(static_cast<long>(s.power)) * (s.weight_has_x ? q_lx : q_l);
  return (s.alternating && l % 2 == 1) ? -term : term;
}

Rat partial_sum(const SeriesShape& s, const Rat& q0, std::size_t terms) {
  mpq_class acc = 0;
  for (std::size_t l = 0; l < terms; ++l) acc += series_term(s, q0, l).raw();
  return s.prefactor * Rat(acc);
}

Enclosure enclose(const SeriesShape& s, const Rat& q0, const Rat& tol) {
  check_domain(q0, tol);
  const auto [terms, tail] = truncation(s, q0, tol);
  const Rat centre = partial_sum(s, q0, terms);
  return Enclosure{centre - tail, centre + tail, terms};
}

}  // namespace

bool enclosure_contains(const Enclosure& e, const Rat& v) { return e.lo <= v && v <= e.hi; }

Enclosure series_q_euler(std::size_t n, std::size_t x, const Rat& q0, const Rat& tol) {
  return enclose({Rat(1) + q0, true, n, x, false}, q0, tol);
}

Enclosure series_q_genocchi(std::size_t n, std::size_t x, const Rat& q0, const Rat& tol) {
  if (n == 0) throw std::invalid_argument("q-Genocchi series requires n >= 1");
  return enclose({Rat(static_cast<long>(n)) * (Rat(1) + q0), true, n - 1, x, true}, q0, tol);
}

Enclosure series_q_bernoulli(std::size_t n, const Rat& q0, const Rat& tol) {
  if (n == 0) throw std::invalid_argument("q-Bernoulli series requires n >= 1");
  return enclose({Rat(-static_cast<long>(n)), false, n - 1, 0, false}, q0, tol);
}

std::vector<Rat> q_euler_partial_sums(std::size_t n, std::size_t x, const Rat& q0, std::size_t count) {
  check_domain(q0, Rat(1));
  const SeriesShape s{Rat(1) + q0, true, n, x, false};
  std::vector<Rat> out;
  out.reserve(count);
  Rat acc;
  for (std::size_t l = 0; l < count; ++l) {
    acc += series_term(s, q0, l);
    out.push_back(s.prefactor * acc);
  }
  return out;
}

}  // namespace qgen
