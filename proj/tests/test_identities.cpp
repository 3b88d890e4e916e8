#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "qgen/classical.hpp"
#include "qgen/identities.hpp"
#include "qgen/qfamilies.hpp"
#include "qgen/render.hpp"

using namespace qgen;

namespace {

ParamTuple params(std::initializer_list<std::pair<const char*, long>> values) {
  ParamTuple t;
  for (const auto& [name, v] : values) t.push_back({name, v});
  return t;
}

std::vector<long> range(long lo, long hi, long step = 1) {
  std::vector<long> v;
  for (long i = lo; i <= hi; i += step) v.push_back(i);
  return v;
}

}  // namespace

TEST(Catalog, CompleteAndDuplicateFree) {
  const auto& cat = catalog();
  EXPECT_EQ(cat.size(), 16u);
  std::set<IdentityId> ids;
  for (const auto& spec : cat) {
    EXPECT_TRUE(ids.insert(spec.id).second);
    ASSERT_FALSE(spec.variants.empty());
    EXPECT_EQ(spec.variants.front().name, "printed");
    EXPECT_EQ(identity_from_name(identity_name(spec.id)), spec.id);
  }
}

TEST(Catalog, Examples) {
  EXPECT_EQ(identity_spec(IdentityId::EQ17).variants.size(), 1u);
  const auto& prop2 = identity_spec(IdentityId::PROP2);
  ASSERT_EQ(prop2.variants.size(), 2u);
  EXPECT_EQ(prop2.variants[1].name, "corrected");
  const auto& thm4 = identity_spec(IdentityId::THM4_ADD);
  EXPECT_FALSE(thm4.find_variant("printed")->evaluable);
  EXPECT_TRUE(thm4.find_variant("corrected")->evaluable);
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify(IdentityId::EQ17, "printed", params({{"n", 2}})).holds_exact);
  const auto r = verify(IdentityId::PROP2, "printed", params({{"n", 1}, {"m", 1}}));
  EXPECT_FALSE(r.holds_exact);
  EXPECT_EQ(parse_ratfn(r.difference), parse_ratfn("2*q/((1+q)*(1+q^2))"));
  EXPECT_EQ(r.difference, "(2*q)/(1+q+q^2+q^3)");
  EXPECT_TRUE(verify(IdentityId::PROP2, "corrected", params({{"n", 2}, {"m", 1}})).holds_exact);
}

TEST(Verify, ParityViolation) {
  try {
    verify(IdentityId::EQ11, "printed", params({{"n", 2}, {"m", 2}}));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "m must be odd for this identity");
  }
}

TEST(Verify, BadParameters) {
  EXPECT_THROW(verify(IdentityId::EQ17, "printed", {}), std::invalid_argument);
  EXPECT_THROW(verify(IdentityId::EQ17, "printed", params({{"n", 2}, {"k", 1}})), std::invalid_argument);
  EXPECT_THROW(verify(IdentityId::EQ17, "corrected", params({{"n", 2}})), std::invalid_argument);
  EXPECT_THROW(verify(IdentityId::EQ17, "printed", params({{"n", 0}})), std::invalid_argument);
}

TEST(Verify, UnevaluableIsRecorded) {
  const auto r = verify(IdentityId::THM4_ADD, "printed", params({{"n", 2}}));
  EXPECT_FALSE(r.evaluable);
  EXPECT_FALSE(r.holds_exact);
  EXPECT_NE(r.difference.find("unevaluable"), std::string::npos);
}

TEST(Verify, SpotChecksAgreeOnPolyXIdentities) {
  for (auto id : {IdentityId::EQ10_DIST, IdentityId::EQ11, IdentityId::THM4_DIST, IdentityId::EQ23}) {
    for (const auto& v : identity_spec(id).variants) {
      const auto r = verify(id, v.name, params({{"n", 3}, {"m", 3}}));
      EXPECT_TRUE(r.spot_consistent) << identity_name(id) << " " << v.name;
    }
  }
}

TEST(FirstFailure, Examples) {
  const auto f = first_failure(IdentityId::PROP2, "printed", {{"n", range(1, 8)}, {"m", range(1, 8)}});
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, params({{"n", 1}, {"m", 1}}));
  EXPECT_FALSE(first_failure(IdentityId::EQ17, "printed", {{"n", range(1, 10)}}));
  EXPECT_FALSE(first_failure(IdentityId::PROP2, "printed", {{"n", {}}, {"m", range(1, 3)}}));
}

TEST(RunSuite, EmptyConfig) { EXPECT_TRUE(run_suite(SuiteConfig{}).empty()); }

TEST(RunSuite, EQ17Range) {
  SuiteConfig config;
  config.entries.push_back({"EQ17", {{"n", range(1, 10)}}, {}});
  const auto reports = run_suite(config);
  ASSERT_EQ(reports.size(), 10u);
  for (const auto& r : reports) EXPECT_TRUE(r.holds_exact);
}

TEST(RunSuite, EQ6Range) {
  SuiteConfig config;
  config.entries.push_back({"EQ6", {{"m", range(2, 10)}, {"n", {1, 3, 5, 7}}}, {}});
  const auto reports = run_suite(config);
  EXPECT_EQ(reports.size(), 36u);
  for (const auto& r : reports) EXPECT_TRUE(r.holds_exact) << format_params(r.params);
}

TEST(RunSuite, UnknownIdRejected) {
  SuiteConfig config;
  config.entries.push_back({"EQ99", {}, {}});
  EXPECT_THROW(run_suite(config), std::invalid_argument);
}

TEST(RunSuite, DeterministicAcrossThreadCounts) {
  const SuiteConfig base = parse_suite_config("PROP2.n = 1..3\nPROP2.m = 1..3\nEQ12.n = 1..4\n");
  SuiteConfig one = base, four = base;
  one.threads = 1;
  four.threads = 4;
  EXPECT_EQ(to_json(run_suite(one), false), to_json(run_suite(four), false));
}

TEST(RunSuite, OrderingIsCatalogThenVariantThenParams) {
  const auto reports = run_suite(parse_suite_config("PROP2.n = 1..2\nPROP2.m = 1..2\nEQ17.n = 2,1\n"));
  ASSERT_EQ(reports.size(), 10u);
  EXPECT_EQ(reports[0].id, IdentityId::PROP2);
  EXPECT_EQ(reports[0].variant, "printed");
  EXPECT_EQ(reports[1].params, params({{"n", 1}, {"m", 2}}));
  EXPECT_EQ(reports[4].variant, "corrected");
  EXPECT_EQ(reports[8].id, IdentityId::EQ17);
  EXPECT_EQ(reports[8].params, params({{"n", 1}}));
}

TEST(SuiteConfig, Parsing) {
  const auto c = parse_suite_config(
      "# ranges\nthreads = 3\nEQ17.n = 1..3, 7\nPROP2 = default\nEQ12.variants = corrected\n"
      "oracle = off\noracle.tol_exp = 30\nreport = r.json\n");
  EXPECT_EQ(c.threads, 3u);
  EXPECT_FALSE(c.oracle_arbitration);
  EXPECT_EQ(c.oracle_tol_exp, 30);
  EXPECT_EQ(c.report_path, "r.json");
  ASSERT_EQ(c.entries.size(), 3u);
  const auto reports = run_suite(parse_suite_config("EQ17.n = 1..3, 7\n"));
  EXPECT_EQ(reports.size(), 4u);
}

TEST(SuiteConfig, Errors) {
  EXPECT_THROW(parse_suite_config("EQ17.n 1..3\n"), std::invalid_argument);
  EXPECT_THROW(parse_suite_config("EQ99.n = 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_suite_config("EQ17.n = a\n"), std::invalid_argument);
  EXPECT_THROW(parse_suite_config("oracle = maybe\n"), std::invalid_argument);
  EXPECT_THROW(run_suite(parse_suite_config("EQ17.k = 1\n")), std::invalid_argument);
}

TEST(DefaultSuite, VariantExclusivity) {
  const auto reports = run_suite(parse_suite_config(
      "PROP2.n = 1..3\nPROP2.m = 1..3\nEQ12.n = 1..3\nEQ12.m = 1,3\nEQ21.n = 0..3\nTHM3A.n = 1..3\n"
      "EQ24.n = 1..3\nEQ24.m = 1,3\nEQ25_FINAL.n = 1..3\nEQ25_FINAL.m = 1,3\n"));
  for (const auto& spec : catalog()) {
    if (spec.variants.size() < 2) continue;
    bool any_variant_all_hold = false;
    bool seen = false;
    for (const auto& v : spec.variants) {
      bool all = true, any = false;
      for (const auto& r : reports) {
        if (r.id != spec.id || r.variant != v.name) continue;
        any = seen = true;
        all = all && r.holds_exact;
      }
      if (any && all) any_variant_all_hold = true;
    }
    if (seen) EXPECT_TRUE(any_variant_all_hold) << identity_name(spec.id);
  }
}

TEST(DefaultSuite, MEqualsOneDegeneracy) {
  for (auto id : {IdentityId::EQ10_DIST, IdentityId::EQ11, IdentityId::THM4_DIST, IdentityId::EQ23}) {
    const auto& spec = identity_spec(id);
    for (long n = spec.params[0].min_value; n <= 6; ++n) {
      const auto r = verify(id, spec.variants.back().name, params({{"n", n}, {"m", 1}}));
      EXPECT_TRUE(r.holds_exact) << identity_name(id) << " n=" << n;
    }
  }
}

TEST(DefaultSuite, Prop2ClassicalLimit) {
  // q -> 1 of the corrected form against the alternating power sum
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const auto sides = build_sides(IdentityId::PROP2, "corrected",
                                     params({{"n", static_cast<long>(n)}, {"m", static_cast<long>(m)}}));
      const Rat lhs = std::get<RatFn>(sides.lhs).eval_at_one();
      const Rat rhs = std::get<RatFn>(sides.rhs).eval_at_one();
      EXPECT_EQ(lhs, rhs);
      Rat expected = 0;
      for (long l = 0; l < static_cast<long>(n); ++l) expected += Rat(l % 2 == 0 ? 1 : -1) * Rat(l).pow(m);
      EXPECT_EQ(lhs, expected) << n << " " << m;
    }
  }
}

TEST(Reports, JsonAndSummary) {
  const auto reports = run_suite(parse_suite_config("PROP2.n = 1..2\nPROP2.m = 1\nEQ12.n = 1..2\nEQ12.m = 3\n"));
  const auto j = to_json(reports, false);
  ASSERT_TRUE(j.is_array());
  EXPECT_FALSE(j[0].contains("elapsed_ms"));
  EXPECT_TRUE(to_json(reports)[0].contains("elapsed_ms"));
  const std::string summary = summary_table(reports);
  EXPECT_NE(summary.find("PROP2"), std::string::npos);
  EXPECT_NE(summary.find("n=1,m=1"), std::string::npos);
  const auto parity = parity_table(reports);
  ASSERT_FALSE(parity.empty());
  EXPECT_EQ(parity[0].id, IdentityId::EQ12);
  EXPECT_TRUE(all_expected_hold(reports));
}
