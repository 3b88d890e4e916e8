#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qgen/classical.hpp"
#include "qgen/poly_x.hpp"
#include "qgen/rat_fn.hpp"

namespace qgen {

enum class RecordKind { number, polynomial, enclosure, report };

/// One unit of CLI output. `payload` holds the exact value(s) with "num/den"
/// strings; `plain` and `latex` render the principal value.
struct OutputRecord {
  RecordKind kind = RecordKind::number;
  std::string family;
  std::size_t n = 0;
  std::optional<Rat> q;
  std::optional<std::string> variant;
  nlohmann::json payload;
  std::string plain;
  std::string latex;
};

OutputRecord number_record(std::string family, std::size_t n, const RatFn& value);
OutputRecord polynomial_record(std::string family, std::size_t n, const PolyX& value);
OutputRecord polynomial_record(std::string family, std::size_t n, const XPoly& value);

nlohmann::json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& j);
/// The RatFn carried by a number record.
RatFn record_value(const OutputRecord& record);

/// Renders records as "json" (array of records), "csv" (header
/// "family,n,value"), "latex" (tabular rows) or "plain" (one value per line).
/// Throws std::invalid_argument for any other format.
std::string emit(const std::vector<OutputRecord>& records, std::string_view format);

std::string_view record_kind_name(RecordKind kind);

}  // namespace qgen
