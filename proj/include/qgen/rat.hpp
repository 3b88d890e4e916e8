#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace qgen {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class value);

  /// Parses "a" or "a/b" with an optional leading sign. Throws
  /// std::invalid_argument on malformed input or a zero denominator.
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer power; negative exponents require a nonzero value.
  Rat pow(long exponent) const;
  Rat abs() const { return Rat(mpq_class(::abs(value_))); }

  /// "a" or "a/b".
  std::string str() const;

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  Rat operator-() const { return Rat(mpq_class(-value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// Binomial coefficient C(n, k); zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace qgen
