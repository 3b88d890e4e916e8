#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qgen/classical.hpp"
#include "qgen/poly_x.hpp"
#include "qgen/rat_fn.hpp"

namespace qgen {

enum class IdentityId {
  EQ5,
  EQ6,
  EQ10_DIST,
  EQ10_ADD,
  EQ11,
  EQ12,
  PROP1,
  PROP2,
  EQ17,
  THM3A,
  EQ21,
  THM4_DIST,
  THM4_ADD,
  EQ23,
  EQ24,
  EQ25_FINAL,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// One named integer parameter, e.g. n or m. Tuples are ordered
/// lexicographically by the parameters in declaration order.
struct ParamSpec {
  std::string name;
  long min_value = 0;
  bool must_be_odd = false;
  std::vector<long> defaults;
};

struct Param {
  std::string name;
  long value = 0;
  friend bool operator==(const Param&, const Param&) = default;
};
using ParamTuple = std::vector<Param>;

/// Both sides of an identity instance. Classical identities compare XPoly or
/// constant RatFn values; q-identities compare RatFn or PolyX values.
using Side = std::variant<RatFn, PolyX, XPoly>;
struct IdentitySides {
  Side lhs;
  Side rhs;
};

struct IdentityVariant {
  std::string name;
  /// The edit relative to the printed form, or "as printed".
  std::string description;
  bool expected_to_hold = true;
  /// False for printed forms that cannot be computed (e.g. an infinite sum).
  bool evaluable = true;
  std::function<IdentitySides(const ParamTuple&)> build;
};

struct IdentitySpec {
  IdentityId id;
  std::string anchor;
  std::vector<ParamSpec> params;
  std::vector<IdentityVariant> variants;

  const IdentityVariant* find_variant(std::string_view name) const;
};

struct IdentityReport {
  IdentityId id;
  std::string variant;
  ParamTuple params;
  bool holds_exact = false;
  bool evaluable = true;
  bool expected_to_hold = true;
  /// rhs - lhs in plain text; "0" iff holds_exact. For unevaluable variants
  /// the reason is recorded instead.
  std::string difference;
  /// PolyX sides only: values at X = q^j, j = 0,1,2, agree with the verdict.
  bool spot_consistent = true;
  std::chrono::nanoseconds elapsed{0};
};

/// The complete identity catalog, in enum order.
const std::vector<IdentitySpec>& catalog();
const IdentitySpec& identity_spec(IdentityId id);

/// Builds both sides for a variant after validating parameters. Throws
/// std::invalid_argument for unknown variants, missing or out-of-range
/// parameters, and parity violations ("m must be odd for this identity").
IdentitySides build_sides(IdentityId id, std::string_view variant, const ParamTuple& params);

/// Exact check: builds both sides, subtracts and reduces.
IdentityReport verify(IdentityId id, std::string_view variant, const ParamTuple& params);

/// Parameter values per name; names not listed fall back to the defaults.
using ParamRanges = std::map<std::string, std::vector<long>>;

/// Cartesian product of the ranges in declaration order, lexicographic.
std::vector<ParamTuple> enumerate_params(const IdentitySpec& spec, const ParamRanges& ranges);

/// Lexicographically least failing tuple within the bounds, if any.
std::optional<ParamTuple> first_failure(IdentityId id, std::string_view variant, const ParamRanges& bounds);

struct SuiteEntry {
  std::string id;
  ParamRanges ranges;
  /// Empty means every variant of the identity.
  std::vector<std::string> variants;
};

struct SuiteConfig {
  std::vector<SuiteEntry> entries;
  std::size_t threads = 1;
  /// Settings read by the CLI's suite command; run_suite ignores them.
  bool oracle_arbitration = true;
  long oracle_tol_exp = 25;
  std::string report_path;
};

/// Every catalog identity with its default ranges.
SuiteConfig default_suite_config();

/// Parses the flat key/value config format:
///   # comment
///   EQ17.n = 1..10        ranges: "a..b", "a,b,c" or a mix
///   PROP2 = default       include with default ranges
///   EQ12.variants = corrected
///   threads = 2
///   oracle = on           q-Genocchi closed-form arbitration (on|off)
///   oracle.tol_exp = 25   tolerance 10^-25
///   report = out.json
/// Throws std::invalid_argument on malformed lines or unknown ids.
SuiteConfig parse_suite_config(std::string_view text);

/// One report per (id, variant, tuple), ordered by catalog id, catalog
/// variant order, then lexicographic tuple, independent of thread count.
/// Throws std::invalid_argument for an unknown id.
std::vector<IdentityReport> run_suite(const SuiteConfig& config);

nlohmann::json to_json(const IdentityReport& report, bool include_timing = true);
nlohmann::json to_json(const std::vector<IdentityReport>& reports, bool include_timing = true);
std::string format_params(const ParamTuple& params);

/// Counts of holding tuples split by the parity of n, for the identities
/// whose printed bracket quotients depend on that parity.
struct ParityVerdict {
  IdentityId id;
  std::string variant;
  bool n_even = false;
  std::size_t holds = 0;
  std::size_t total = 0;
};
std::vector<ParityVerdict> parity_table(const std::vector<IdentityReport>& reports);

/// Human-readable summary: per-variant totals, first failures and the parity
/// table.
std::string summary_table(const std::vector<IdentityReport>& reports);

/// True when every report of an expected-to-hold variant holds.
bool all_expected_hold(const std::vector<IdentityReport>& reports);

}  // namespace qgen
