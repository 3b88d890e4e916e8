#include "qgen/qfamilies.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qgen {

namespace {

// Memo for the closed forms; results are identical with or without it.
template <typename Key, typename Value>
class Memo {
 public:
  template <typename Fn>
  Value get(const Key& key, Fn&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mutex_);
    return values_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> values_;
};

RatFn one_minus_q_inverse_pow(std::size_t k) { return RatFn(PolyQ{1, -1}).inverse().pow(static_cast<long>(k)); }

RatFn signed_binomial(std::size_t n, std::size_t l) {
  const Rat c(binomial(n, l), 1);
  return RatFn(l % 2 == 0 ? c : -c);
}

// 1/(1 + s q^{k}) with s = +1 or -1.
RatFn reciprocal_binomial(std::size_t k, long s) {
  return RatFn(PolyQ(1) + PolyQ::monomial(Rat(s), k)).inverse();
}

// sum_{l=0}^{n} C(n,l) (-1)^l / (1 + s q^{l+1}) X^{l + shift}
PolyX alternating_kernel(std::size_t n, long s, std::size_t shift) {
  std::vector<RatFn> coeffs(n + 1 + shift);
  for (std::size_t l = 0; l <= n; ++l) coeffs[l + shift] = signed_binomial(n, l) * reciprocal_binomial(l + 1, s);
  return PolyX(std::move(coeffs));
}

RatFn alternating_sum(std::size_t n, long s) {
  RatFn acc;
  for (std::size_t l = 0; l <= n; ++l) acc += signed_binomial(n, l) * reciprocal_binomial(l + 1, s);
  return acc;
}

void require_odd(std::size_t m) {
  if (m == 0 || m % 2 == 0) throw std::invalid_argument("m must be odd");
}

}  // namespace

RatFn q_int(std::size_t n) {
  std::vector<Rat> coeffs(n, Rat(1));
  return RatFn(PolyQ(std::move(coeffs)));
}

RatFn q_int_signed(std::size_t n) {
  const Rat sign = n % 2 == 0 ? Rat(1) : Rat(-1);
  return RatFn::normalize(PolyQ(1) - PolyQ::monomial(sign, n), PolyQ{1, 1});
}

RatFn q_two(std::size_t k) { return RatFn(PolyQ(1) + PolyQ::monomial(1, k)); }

RatFn q_euler_number(std::size_t n) {
  static Memo<std::size_t, RatFn> memo;
  return memo.get(n, [n] { return q_two() * one_minus_q_inverse_pow(n) * alternating_sum(n, 1); });
}

PolyX q_euler_poly(std::size_t n) {
  static Memo<std::size_t, PolyX> memo;
  return memo.get(n, [n] { return alternating_kernel(n, 1, 0) * (q_two() * one_minus_q_inverse_pow(n)); });
}

RatFn q_genocchi_number(std::size_t n, GenocchiForm form) {
  if (n == 0) return {};
  static Memo<std::pair<std::size_t, GenocchiForm>, RatFn> memo;
  return memo.get({n, form}, [n, form] {
    RatFn scale = RatFn(Rat(static_cast<long>(n))) * one_minus_q_inverse_pow(n - 1);
    if (form == GenocchiForm::with_q_two) scale *= q_two();
    return scale * alternating_sum(n - 1, 1);
  });
}

PolyX q_genocchi_poly(std::size_t n, GenocchiForm form) {
  if (n == 0) return {};
  static Memo<std::pair<std::size_t, GenocchiForm>, PolyX> memo;
  return memo.get({n, form}, [n, form] {
    RatFn scale = RatFn(Rat(static_cast<long>(n))) * one_minus_q_inverse_pow(n - 1);
    if (form == GenocchiForm::with_q_two) scale *= q_two();
    return alternating_kernel(n - 1, 1, 1) * scale;
  });
}

RatFn q_bernoulli_number(std::size_t n) {
  if (n == 0) return RatFn(1);
  static Memo<std::size_t, RatFn> memo;
  return memo.get(n, [n] {
    return RatFn(Rat(-static_cast<long>(n))) * one_minus_q_inverse_pow(n - 1) * alternating_sum(n - 1, -1);
  });
}

RatFn star_quotient(StarVariant variant, std::size_t m, std::size_t n, StarQuotient quotient) {
  if (variant == StarVariant::euler && quotient == StarQuotient::printed) {
    return q_int_signed(m * (n + 1)) / q_int_signed(n + 1);
  }
  const std::size_t k = (variant == StarVariant::genocchi && quotient == StarQuotient::corrected) ? n : n + 1;
  return q_two(m * k) / q_two(k);
}

RatFn star_apply(StarVariant variant, std::size_t m, std::size_t n, const RatFn& f, StarQuotient quotient) {
  require_odd(m);
  if (f.is_zero()) return {};
  const RatFn mq_pow_n = q_int(m).pow(static_cast<long>(n));
  const RatFn tail = mq_pow_n * star_quotient(variant, m, n, quotient) * f.subst_qpow(m);
  if (variant == StarVariant::euler) return q_int_signed(m) * f - tail;
  return q_two(m) * q_int(m) * f - q_two() * tail;
}

}  // namespace qgen
