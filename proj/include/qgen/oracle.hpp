#pragma once

#include <cstddef>
#include <vector>

#include "qgen/rat.hpp"

namespace qgen {

/// Closed rational interval [lo, hi] certified to contain a series value.
struct Enclosure {
  Rat lo;
  Rat hi;
  /// Number of series terms summed exactly.
  std::size_t terms = 0;

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }
};

bool enclosure_contains(const Enclosure& e, const Rat& v);

// Each series is summed exactly over l < L and the remainder is bounded by a
// geometric tail, using |[l+x]_q| < 1/(1-q) for 0 < q < 1. L is the least
// index whose tail bound is <= tol, so the enclosure has width <= 2 tol.
// All three throw std::invalid_argument("oracle requires rational q in (0,1)")
// for q0 outside (0,1) and std::invalid_argument for tol <= 0.

/// E_{n,q}(x) = [2]_q sum_{l>=0} (-1)^l q^l [l+x]_q^n.
Enclosure series_q_euler(std::size_t n, std::size_t x, const Rat& q0, const Rat& tol);
/// G_{n,q}(x) = n [2]_q sum_{l>=0} (-1)^l q^{l+x} [l+x]_q^{n-1}, n >= 1.
Enclosure series_q_genocchi(std::size_t n, std::size_t x, const Rat& q0, const Rat& tol);
/// B_{n,q} = -n sum_{l>=0} q^l [l]_q^{n-1}, n >= 1.
Enclosure series_q_bernoulli(std::size_t n, const Rat& q0, const Rat& tol);

/// The first `count` partial sums of the E_{n,q}(x) series (no tail bound).
std::vector<Rat> q_euler_partial_sums(std::size_t n, std::size_t x, const Rat& q0, std::size_t count);

}  // namespace qgen
