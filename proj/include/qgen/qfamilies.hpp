#pragma once

#include <cstddef>

#include "qgen/poly_x.hpp"
#include "qgen/rat_fn.hpp"

namespace qgen {

/// [n]_q = 1 + q + ... + q^{n-1}.
RatFn q_int(std::size_t n);
/// [n]_{-q} = (1 - (-q)^n)/(1 + q), for every n (not only odd n).
RatFn q_int_signed(std::size_t n);
/// [2]_{q^k} = 1 + q^k.
RatFn q_two(std::size_t k = 1);

/// E_{n,q} = [2]_q/(1-q)^n * sum_l C(n,l) (-1)^l / (1 + q^{l+1}).
RatFn q_euler_number(std::size_t n);
/// E_{n,q}(x) as a polynomial in X = q^x; the l-th term carries X^l.
PolyX q_euler_poly(std::size_t n);

/// Closed forms for the q-Genocchi family. `with_q_two` is the form that
/// agrees with the series [2]_q t sum (-1)^n q^{n+x} e^{[n+x]_q t};
/// `without_q_two` drops the overall factor [2]_q and is kept only so that
/// the discrepancy can be demonstrated.
enum class GenocchiForm { with_q_two, without_q_two };

/// G_{0,q} = 0; G_{n,q} = n [2]_q/(1-q)^{n-1} sum_{l<n} C(n-1,l) (-1)^l/(1+q^{l+1}).
RatFn q_genocchi_number(std::size_t n, GenocchiForm form = GenocchiForm::with_q_two);
/// G_{n,q}(x); the l-th term carries X^{l+1}, so the constant term in X is 0.
PolyX q_genocchi_poly(std::size_t n, GenocchiForm form = GenocchiForm::with_q_two);

/// Coefficients of -t sum_n q^n e^{[n]_q t}:
/// B_{n,q} = -n/(1-q)^{n-1} sum_{j<n} C(n-1,j) (-1)^j/(1-q^{j+1}) for n >= 1.
/// The series gives B_{0,q} = 0; this function returns 1 for n = 0 by
/// convention. No identity in this library consumes B_{0,q}.
RatFn q_bernoulli_number(std::size_t n);

/// Which family's *-operator coefficients to use.
enum class StarVariant { euler, genocchi };

/// The bracket quotient multiplying f(q^m).
///   euler,    printed:   [m(n+1)]_{-q} / [n+1]_{-q}
///   euler,    corrected: [2]_{q^{m(n+1)}} / [2]_{q^{n+1}}
///   genocchi, printed:   [2]_{q^{m(n+1)}} / [2]_{q^{n+1}}
///   genocchi, corrected: [2]_{q^{mn}} / [2]_{q^n}
enum class StarQuotient { printed, corrected };

/// The * operation on a sequence element f = f_n(q):
///   euler:    (1 - [m]_q^n) * f = [m]_{-q} f(q) - [m]_q^n Q f(q^m)
///   genocchi: ([m]_q - [m]_q^n) * f = [2]_{q^m}[m]_q f(q) - [2]_q [m]_q^n Q f(q^m)
/// with Q the selected bracket quotient. Throws std::invalid_argument("m must
/// be odd") for even m.
RatFn star_apply(StarVariant variant, std::size_t m, std::size_t n, const RatFn& f,
                 StarQuotient quotient = StarQuotient::printed);

/// The bracket quotient used by star_apply.
RatFn star_quotient(StarVariant variant, std::size_t m, std::size_t n, StarQuotient quotient);

}  // namespace qgen
