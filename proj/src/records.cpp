#include "qgen/records.hpp"

#include <sstream>
#include <stdexcept>

#include "qgen/render.hpp"

namespace qgen {

namespace {

constexpr std::string_view kKindNames[] = {"number", "polynomial", "enclosure", "report"};

RecordKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kKindNames[i] == name) return static_cast<RecordKind>(i);
  }
  throw std::invalid_argument("unknown record kind '" + std::string(name) + "'");
}

}  // namespace

std::string_view record_kind_name(RecordKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

OutputRecord number_record(std::string family, std::size_t n, const RatFn& value) {
  OutputRecord r;
  r.kind = RecordKind::number;
  r.family = std::move(family);
  r.n = n;
  r.payload = to_json(value);
  r.plain = to_plain(value);
  r.latex = to_latex(value);
  return r;
}

OutputRecord polynomial_record(std::string family, std::size_t n, const PolyX& value) {
  OutputRecord r;
  r.kind = RecordKind::polynomial;
  r.family = std::move(family);
  r.n = n;
  r.payload = to_json(value);
  r.payload["variable"] = "X";
  r.plain = to_plain(value);
  r.latex = to_latex(value);
  return r;
}

OutputRecord polynomial_record(std::string family, std::size_t n, const XPoly& value) {
  OutputRecord r;
  r.kind = RecordKind::polynomial;
  r.family = std::move(family);
  r.n = n;
  auto coeffs = nlohmann::json::array();
  for (const Rat& c : value.coefficients()) coeffs.push_back(to_json(RatFn(c)));
  r.payload = {{"coefficients", coeffs}, {"variable", "x"}};
  r.plain = to_plain(value.as_poly(), "x");
  r.latex = to_latex(value.as_poly(), "x");
  return r;
}

nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json j = {{"kind", record_kind_name(r.kind)}, {"family", r.family}, {"n", r.n}};
  j["q"] = r.q ? nlohmann::json(rat_json_string(*r.q)) : nlohmann::json(nullptr);
  j["variant"] = r.variant ? nlohmann::json(*r.variant) : nlohmann::json(nullptr);
  j["plain"] = r.plain;
  j["latex"] = r.latex;
  j["value"] = r.payload;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.kind = kind_from_name(j.at("kind").get<std::string>());
  r.family = j.at("family").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  if (!j.at("q").is_null()) r.q = Rat::parse(j.at("q").get<std::string>());
  if (!j.at("variant").is_null()) r.variant = j.at("variant").get<std::string>();
  r.plain = j.at("plain").get<std::string>();
  r.latex = j.at("latex").get<std::string>();
  r.payload = j.at("value");
  return r;
}

RatFn record_value(const OutputRecord& record) {
  if (record.kind != RecordKind::number) throw std::invalid_argument("not a number record");
  return ratfn_from_json(record.payload);
}

std::string emit(const std::vector<OutputRecord>& records, std::string_view format) {
  std::ostringstream out;
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else if (format == "csv") {
    out << "family,n,value\n";
    for (const auto& r : records) out << r.family << "," << r.n << "," << r.plain << "\n";
  } else if (format == "latex") {
    for (const auto& r : records) out << r.n << " & $" << r.latex << "$ \\\\\n";
  } else if (format == "plain") {
    for (const auto& r : records) out << r.plain << "\n";
  } else {
    throw std::invalid_argument("unknown format '" + std::string(format) + "'");
  }
  return out.str();
}

}  // namespace qgen
