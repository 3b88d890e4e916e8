#include <gtest/gtest.h>

#include <stdexcept>

#include "qgen/classical.hpp"
#include "qgen/qfamilies.hpp"
#include "qgen/records.hpp"
#include "qgen/render.hpp"

using namespace qgen;

TEST(Emit, EmptyCsvIsHeaderOnly) { EXPECT_EQ(emit({}, "csv"), "family,n,value\n"); }

TEST(Emit, SingleJsonRecord) {
  const auto j = nlohmann::json::parse(emit({number_record("q-euler", 1, q_euler_number(1))}, "json"));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["kind"], "number");
  EXPECT_EQ(j[0]["plain"], "(-q)/(1+q^2)");
}

TEST(Emit, LatexTable) {
  std::vector<OutputRecord> records;
  for (std::size_t n = 0; n <= 2; ++n) records.push_back(number_record("q-euler", n, q_euler_number(n)));
  const std::string text = emit(records, "latex");
  EXPECT_EQ(text,
            "0 & $1$ \\\\\n"
            "1 & $\\frac{-q}{1+q^{2}}$ \\\\\n"
            "2 & $\\frac{-q+q^{2}}{1-q+2q^{2}-q^{3}+q^{4}}$ \\\\\n");
}

TEST(Emit, CsvAndPlain) {
  const std::vector<OutputRecord> records = {number_record("genocchi", 6, RatFn(genocchi_number(6))),
                                             number_record("euler", 1, RatFn(euler_number(1)))};
  EXPECT_EQ(emit(records, "csv"), "family,n,value\ngenocchi,6,-3\neuler,1,-1/2\n");
  EXPECT_EQ(emit(records, "plain"), "-3\n-1/2\n");
}

TEST(Emit, UnknownFormat) { EXPECT_THROW(emit({}, "xml"), std::invalid_argument); }

TEST(Records, JsonRoundTrip) {
  for (std::size_t n = 0; n <= 6; ++n) {
    OutputRecord r = number_record("q-genocchi", n, q_genocchi_number(n));
    r.q = Rat(1, 3);
    const OutputRecord back = record_from_json(nlohmann::json::parse(to_json(r).dump()));
    EXPECT_EQ(record_value(back), q_genocchi_number(n));
    EXPECT_EQ(back.q, r.q);
    EXPECT_EQ(back.plain, r.plain);
    EXPECT_EQ(back.family, "q-genocchi");
  }
}

TEST(Records, Polynomials) {
  const auto r = polynomial_record("q-euler", 2, q_euler_poly(2));
  EXPECT_EQ(r.kind, RecordKind::polynomial);
  EXPECT_EQ(polyx_from_json(r.payload), q_euler_poly(2));
  const auto c = polynomial_record("euler", 2, euler_poly(2));
  EXPECT_EQ(c.plain, "-x+x^2");
  EXPECT_EQ(record_kind_name(RecordKind::enclosure), "enclosure");
}
