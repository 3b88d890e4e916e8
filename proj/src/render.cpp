#include "qgen/render.hpp"

#include <cctype>
#include <stdexcept>

namespace qgen {

namespace {

std::string plain_term(const Rat& c, std::size_t k, std::string_view var) {
  std::string power(var);
  if (k > 1) power += "^" + std::to_string(k);
  if (k == 0) return c.str();
  if (c == Rat(1)) return power;
  if (c == Rat(-1)) return "-" + power;
  return c.str() + "*" + power;
}

std::string latex_rat(const Rat& c, bool drop_unit) {
  const bool negative = c.sign() < 0;
  const Rat a = c.abs();
  std::string body;
  if (drop_unit && a == Rat(1)) {
    body = "";
  } else if (a.is_integer()) {
    body = a.str();
  } else {
    body = "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
  }
  return (negative ? "-" : "") + body;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RatFn parse() {
    RatFn value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFn expr() {
    RatFn value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RatFn term() {
    RatFn value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const RatFn rhs = unary();
        if (rhs.is_zero()) fail("division by zero");
        value /= rhs;
      } else {
        return value;
      }
    }
  }

  RatFn unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFn power() {
    RatFn base = primary();
    if (accept('^')) {
      skip_ws();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      const long e = integer_literal();
      if (negative && base.is_zero()) fail("zero to a negative power");
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  long integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  RatFn primary() {
    skip_ws();
    if (accept('(')) {
      RatFn value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (pos_ < text_.size() && text_[pos_] == 'q') {
      ++pos_;
      return RatFn::q();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, 'q' or '('");
    return RatFn(Rat(mpz_class(std::string(text_.substr(start, pos_ - start)), 10), 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_plain(const Rat& r) { return r.str(); }

std::string to_plain(const PolyQ& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::string t = plain_term(coeffs[k], k, var);
    if (!out.empty() && t.front() != '-') out += "+";
    out += t;
  }
  return out;
}

std::string to_plain(const RatFn& f) {
  if (f.is_polynomial()) return to_plain(f.num());
  return "(" + to_plain(f.num()) + ")/(" + to_plain(f.den()) + ")";
}

std::string to_plain(const PolyX& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_plain(coeffs[k]) + ")";
    if (k == 1) out += "*X";
    if (k > 1) out += "*X^" + std::to_string(k);
  }
  return out;
}

std::string to_latex(const Rat& r) { return latex_rat(r, false); }

std::string to_latex(const PolyQ& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::string t = latex_rat(coeffs[k], k > 0);
    if (k == 1) t += std::string(var);
    if (k > 1) t += std::string(var) + "^{" + std::to_string(k) + "}";
    if (!out.empty() && t.front() != '-') out += "+";
    out += t;
  }
  return out;
}

std::string to_latex(const RatFn& f) {
  if (f.is_polynomial()) return to_latex(f.num());
  return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

std::string to_latex(const PolyX& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!out.empty()) out += "+";
    out += "\\left(" + to_latex(coeffs[k]) + "\\right)";
    if (k == 1) out += "X";
    if (k > 1) out += "X^{" + std::to_string(k) + "}";
  }
  return out;
}

std::string rat_json_string(const Rat& r) { return r.numerator().get_str() + "/" + r.denominator().get_str(); }

nlohmann::json to_json(const PolyQ& p) {
  auto arr = nlohmann::json::array();
  for (const Rat& c : p.coefficients()) arr.push_back(rat_json_string(c));
  return arr;
}

nlohmann::json to_json(const RatFn& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

nlohmann::json to_json(const PolyX& p) {
  auto arr = nlohmann::json::array();
  for (const RatFn& c : p.coefficients()) arr.push_back(to_json(c));
  return {{"coefficients", arr}};
}

PolyQ polyq_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(Rat::parse(c.get<std::string>()));
  return PolyQ(std::move(coeffs));
}

RatFn ratfn_from_json(const nlohmann::json& j) {
  return RatFn::normalize(polyq_from_json(j.at("num")), polyq_from_json(j.at("den")));
}

PolyX polyx_from_json(const nlohmann::json& j) {
  std::vector<RatFn> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(ratfn_from_json(c));
  return PolyX(std::move(coeffs));
}

RatFn parse_ratfn(std::string_view text) { return ExprParser(text).parse(); }

PolyQ parse_polyq(std::string_view text) {
  const RatFn f = parse_ratfn(text);
  if (!f.is_polynomial()) throw std::invalid_argument("not a polynomial: '" + std::string(text) + "'");
  return f.num();
}

}  // namespace qgen
