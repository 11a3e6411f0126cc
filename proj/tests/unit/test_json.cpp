#include <gtest/gtest.h>

#include "gen.hpp"
#include "supero/error.hpp"
#include "supero/json_io.hpp"

using namespace supero;

TEST(Json, RationalPairs) {
  EXPECT_EQ(to_json(Rational(-3, 6)), Json::parse("[-1, 2]"));
  const Rational big = Rational::parse("123456789012345678901234567890/7");
  const Json j = to_json(big);
  EXPECT_TRUE(j[0].is_string());
  EXPECT_EQ(rational_from_json(j), big);
  EXPECT_THROW(rational_from_json(Json::parse("[1]")), FormatError);
  EXPECT_THROW(rational_from_json(Json::parse("[1, 0]")), FormatError);
}

TEST(Json, AlgebraRoundTripIsExact) {
  std::vector<gen::Family> fams = gen::small_families();
  fams.push_back({"p", {3}});
  fams.push_back({"osp", {3, 2}});
  for (const auto& f : fams) {
    const auto g = gen::build(f);
    const Json j = with_schema(to_json(*g));
    EXPECT_EQ(j.at("schema"), "superO/1");
    EXPECT_EQ(algebra_from_json(Json::parse(j.dump())), *g) << g->name();
  }
}

TEST(Json, SchemaAndShapeErrors) {
  Json j = with_schema(to_json(*build_gl(1, 1)));
  j["schema"] = "other/9";
  EXPECT_THROW(algebra_from_json(j), FormatError);
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"name": "x"})")), FormatError);
  Json k = to_json(*build_gl(1, 1));
  k["brackets"].push_back(Json::parse(R"([0, 99, 0, [1, 1]])"));
  EXPECT_THROW(algebra_from_json(k), FormatError);
}

TEST(Json, SpanRoundTrip) {
  const auto g = build_gl(2, 1);
  const auto h = even_span(g);
  const auto back = span_from_json(g, Json::parse(to_json(h).dump()));
  EXPECT_EQ(back.vectors(), h.vectors());
  EXPECT_EQ(back.label(), h.label());
}

TEST(Json, KeysAreSorted) {
  const auto g = build_gl(1, 1);
  const auto r = cohomology(even_span(g), trivial(g), 2);
  const std::string s = dump(with_schema(to_json(r)));
  EXPECT_LT(s.find("\"N\""), s.find("\"algebra\""));
  EXPECT_LT(s.find("\"algebra\""), s.find("\"schema\""));
  EXPECT_EQ(s.back(), '\n');
}

TEST(Json, ConformanceTable) {
  std::vector<ConformanceRow> rows{{"a", "gl(1|1)", "", true, nullptr}, {"b", "q(2)", "x", false, Json{{"p", 3}}}};
  const Json t = conformance_table("demo", rows);
  EXPECT_FALSE(t.at("all_pass").get<bool>());
  EXPECT_EQ(t.at("rows")[1].at("status"), "fail");
  EXPECT_FALSE(t.at("rows")[0].contains("witness"));
  EXPECT_EQ(t.at("rows")[1].at("witness").at("p"), 3);
}
