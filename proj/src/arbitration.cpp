#include "qgen/arbitration.hpp"

#include <stdexcept>

#include "qgen/render.hpp"

namespace qgen {

namespace {

constexpr std::string_view kFamilyNames[] = {"q-euler", "q-genocchi", "q-bernoulli"};

}  // namespace

std::string_view qfamily_name(QFamily family) { return kFamilyNames[static_cast<std::size_t>(family)]; }

std::optional<QFamily> qfamily_from_name(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kFamilyNames); ++i) {
    if (kFamilyNames[i] == name) return static_cast<QFamily>(i);
  }
  return std::nullopt;
}

OracleCheck check_closed_form(QFamily family, std::size_t n, std::size_t x, const Rat& q0, const Rat& tol,
                              GenocchiForm form) {
  OracleCheck check;
  check.family = family;
  check.n = n;
  check.x = x;
  check.q = q0;
  check.form = form;
  switch (family) {
    case QFamily::q_euler:
      check.enclosure = series_q_euler(n, x, q0, tol);
      check.closed_value = q_euler_poly(n).eval_int(x).eval(q0);
      break;
    case QFamily::q_genocchi:
      check.enclosure = series_q_genocchi(n, x, q0, tol);
      check.closed_value = q_genocchi_poly(n, form).eval_int(x).eval(q0);
      break;
    case QFamily::q_bernoulli:
      if (x != 0) throw std::invalid_argument("q-bernoulli has no polynomial family; x must be 0");
      check.enclosure = series_q_bernoulli(n, q0, tol);
      check.closed_value = q_bernoulli_number(n).eval(q0);
      break;
  }
  check.contained = enclosure_contains(check.enclosure, check.closed_value);
  return check;
}

nlohmann::json to_json(const OracleCheck& c) {
  nlohmann::json j = {{"family", qfamily_name(c.family)},
                      {"n", c.n},
                      {"x", c.x},
                      {"q", rat_json_string(c.q)},
                      {"lo", rat_json_string(c.enclosure.lo)},
                      {"hi", rat_json_string(c.enclosure.hi)},
                      {"closed_value", rat_json_string(c.closed_value)},
                      {"contained", c.contained}};
  if (c.family == QFamily::q_genocchi) {
    j["variant"] = c.form == GenocchiForm::with_q_two ? "corrected" : "printed";
  }
  return j;
}

std::vector<FormVerdict> arbitrate_genocchi_forms(std::size_t n_max, const std::vector<std::size_t>& xs,
                                                  const std::vector<Rat>& qs, const Rat& tol) {
  std::vector<FormVerdict> out;
  for (GenocchiForm form : {GenocchiForm::without_q_two, GenocchiForm::with_q_two}) {
    FormVerdict v{form};
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t x : xs) {
        for (const Rat& q0 : qs) {
          ++v.total;
          if (check_closed_form(QFamily::q_genocchi, n, x, q0, tol, form).contained) ++v.contained;
        }
      }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace qgen
