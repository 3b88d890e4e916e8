#include "qgen/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace qgen {

namespace {

mpz_class parse_integer(std::string_view text, bool allow_sign) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
  }
  mpz_class value(std::string(text.substr(i)), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, true), 1);
  const mpz_class den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
  return Rat(parse_integer(text.substr(0, slash), true), den);
}

Rat Rat::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return (Rat(1) / *this).pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

std::string Rat::str() const { return value_.get_str(10); }

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class result;
  if (k > n) return 0;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace qgen
