#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qgen/oracle.hpp"
#include "qgen/qfamilies.hpp"

namespace qgen {

// Closed forms from qfamilies compared against the series enclosures.

enum class QFamily { q_euler, q_genocchi, q_bernoulli };

std::string_view qfamily_name(QFamily family);
std::optional<QFamily> qfamily_from_name(std::string_view name);

struct OracleCheck {
  QFamily family = QFamily::q_euler;
  std::size_t n = 0;
  std::size_t x = 0;
  Rat q;
  GenocchiForm form = GenocchiForm::with_q_two;
  Enclosure enclosure;
  Rat closed_value;
  bool contained = false;
};

/// Encloses the defining series at (n, x, q0) and evaluates the closed form
/// there. `form` only matters for q-Genocchi. q-Bernoulli requires x = 0.
OracleCheck check_closed_form(QFamily family, std::size_t n, std::size_t x, const Rat& q0, const Rat& tol,
                              GenocchiForm form = GenocchiForm::with_q_two);

/// {family, n, x, q, lo, hi, closed_value, contained, variant}
nlohmann::json to_json(const OracleCheck& check);

struct FormVerdict {
  GenocchiForm form;
  std::size_t contained = 0;
  std::size_t total = 0;
  bool passes() const { return total > 0 && contained == total; }
};

/// Runs both q-Genocchi closed forms over every n in 1..n_max, x in xs and q
/// in qs and counts how often each lands inside the enclosure.
std::vector<FormVerdict> arbitrate_genocchi_forms(std::size_t n_max, const std::vector<std::size_t>& xs,
                                                  const std::vector<Rat>& qs, const Rat& tol);

}  // namespace qgen
