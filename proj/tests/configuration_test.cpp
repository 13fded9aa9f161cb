#include "bcc/configuration.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bcc/families.hpp"

using namespace bcc;

namespace {

const char* kSquareText = R"(# square with a pendant edge
vertex 1
vertex 2
vertex 3
vertex 4
polygon V1 : 1 3
polygon V2 : 2 3
polygon V3 : 1 2
polygon V4 : 1 4
order 1 : V1 V3 V4
order 2 : V3 V2
order 3 : V1 V2
)";

std::string self_text(int n) {
  return "vertex 1 mult " + std::to_string(n) + "\npolygon V : 1 1\norder 1 : V V\n";
}

std::set<std::string> names(const BrauerConfig& cfg, const std::vector<int>& vs) {
  std::set<std::string> out;
  for (int v : vs) out.insert(cfg.vertex_name(v));
  return out;
}

}  // namespace

TEST(Parse, SquareExample) {
  BrauerConfig cfg = parse_config(kSquareText);
  EXPECT_EQ(cfg.vertex_count(), 4);
  EXPECT_EQ(cfg.polygon_count(), 4);
  EXPECT_EQ(cfg, families::square());
}

TEST(Parse, SelfLoopFamily) {
  BrauerConfig cfg = parse_config(self_text(3));
  EXPECT_EQ(cfg.occ("1", "V"), 2);
  EXPECT_EQ(cfg.multiplicity(cfg.vertex_index("1")), 3);
  EXPECT_EQ(cfg, families::self_loop(3));
}

TEST(Parse, EmptyTextFails) {
  EXPECT_THROW(parse_config(""), ParseError);
  EXPECT_THROW(parse_config("# only comments\n\n"), ParseError);
}

TEST(Parse, ReportsLineNumbers) {
  try {
    parse_config("vertex a\nvertex a\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("duplicate vertex"), std::string::npos);
  }
}

TEST(Parse, RejectsUnknownReferences) {
  EXPECT_THROW(parse_config("vertex a\npolygon V : a b\n"), ParseError);
  EXPECT_THROW(parse_config("vertex a\npolygon V : a a\norder a : V W\n"), ParseError);
  EXPECT_THROW(parse_config("vertex a\npolygon V : a a\norder b : V V\n"), ParseError);
  EXPECT_THROW(parse_config("vertex a\npolygon V : a a\npolygon V : a a\n"), ParseError);
  EXPECT_THROW(parse_config("vertex a mult 0\npolygon V : a a\n"), ParseError);
  EXPECT_THROW(parse_config("vertx a\n"), ParseError);
}

TEST(Parse, OrderRotationIsIrrelevant) {
  // Any rotation of a successor sequence denotes the same cyclic order.
  std::string rotated = kSquareText;
  auto pos = rotated.find("order 1 : V1 V3 V4");
  rotated.replace(pos, 18, "order 1 : V4 V1 V3");
  EXPECT_EQ(parse_config(rotated), parse_config(kSquareText));
}

TEST(Validate, SquareIsValid) {
  EXPECT_TRUE(validate(families::square()).valid());
}

TEST(Validate, SingletonPolygonViolatesC2) {
  BrauerConfig cfg = parse_config("vertex a mult 2\npolygon V : a\n");
  ValidationReport report = validate(cfg);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].code, "C2");
}

TEST(Validate, AllTrivialVerticesViolateC3) {
  BrauerConfig cfg = parse_config("vertex a\nvertex b\npolygon V : a b\n");
  ValidationReport report = validate(cfg);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].code, "C3");
}

TEST(Validate, UnusedVertexViolatesC1) {
  BrauerConfig cfg = parse_config("vertex a mult 2\nvertex z\npolygon V : a a\norder a : V V\n");
  ValidationReport report = validate(cfg);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].code, "C1");
}

TEST(Validate, MissingOrderLine) {
  BrauerConfig cfg = parse_config("vertex a mult 2\npolygon V : a a\n");
  ValidationReport report = validate(cfg);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].code, "order");
}

TEST(Validate, OrderInconsistentWithOccurrences) {
  BrauerConfig cfg =
      parse_config("vertex a\nvertex b\npolygon V : a a b\npolygon W : a b\norder a : V V V\norder b : V W\n");
  ValidationReport report = validate(cfg);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].code, "order");
  EXPECT_NE(report.violations[0].message.find("'a'"), std::string::npos);
}

TEST(Occurrences, TwoFive) {
  BrauerConfig cfg = families::two_five();
  EXPECT_EQ(cfg.occ("a", "V"), 5);
  EXPECT_EQ(cfg.occ("a", "W"), 5);
  EXPECT_EQ(cfg.val("a"), 10);
}

TEST(Occurrences, SquareSpotChecks) {
  BrauerConfig cfg = families::square();
  EXPECT_EQ(cfg.occ("1", "V2"), 0);
  EXPECT_EQ(cfg.val("4"), 1);
  EXPECT_EQ(cfg.val("1"), 3);
  EXPECT_THROW(cfg.occ("9", "V1"), std::out_of_range);
  EXPECT_THROW(cfg.val("9"), std::out_of_range);
  EXPECT_THROW(cfg.occ("1", "V9"), std::out_of_range);
}

TEST(Occurrences, ValencyMatchesRecount) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    BrauerConfig cfg = generate_random({.polygon_count = 5, .seed = seed});
    for (int v = 0; v < cfg.vertex_count(); ++v) {
      int recount = 0;
      for (int p = 0; p < cfg.polygon_count(); ++p) {
        for (int m : cfg.polygon_members(p)) {
          if (m == v) ++recount;
        }
      }
      EXPECT_EQ(cfg.val(v), recount);
    }
  }
}

TEST(Classify, Square) {
  BrauerConfig cfg = families::square();
  VertexClassification cls = classify_vertices(cfg);
  EXPECT_EQ(names(cfg, cls.truncated), (std::set<std::string>{"4"}));
  EXPECT_EQ(names(cfg, cls.simple_cycle), (std::set<std::string>{"1", "2", "3"}));
  EXPECT_TRUE(cls.loop_only.empty());
  EXPECT_TRUE(cls.multi_cycle.empty());
}

TEST(Classify, TwoGon) {
  BrauerConfig cfg = families::two_gon();
  VertexClassification cls = classify_vertices(cfg);
  EXPECT_EQ(names(cfg, cls.loop_only), (std::set<std::string>{"a"}));
  EXPECT_EQ(names(cfg, cls.truncated), (std::set<std::string>{"t"}));
}

TEST(Classify, CycleFamily) {
  BrauerConfig cfg = families::cycle(3, 2);
  VertexClassification cls = classify_vertices(cfg);
  EXPECT_EQ(names(cfg, cls.multi_cycle), (std::set<std::string>{"0", "1", "2"}));
  EXPECT_TRUE(cls.truncated.empty());
  EXPECT_TRUE(cls.loop_only.empty());
  EXPECT_TRUE(cls.simple_cycle.empty());
}

TEST(Classify, IsAPartition) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    BrauerConfig cfg = generate_random({.polygon_count = 6, .max_multiplicity = 3, .seed = seed});
    VertexClassification cls = classify_vertices(cfg);
    std::vector<int> all;
    for (const auto* part : {&cls.truncated, &cls.loop_only, &cls.multi_cycle, &cls.simple_cycle}) {
      all.insert(all.end(), part->begin(), part->end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expected(cfg.vertex_count());
    for (int v = 0; v < cfg.vertex_count(); ++v) expected[v] = v;
    EXPECT_EQ(all, expected);
  }
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced(families::square()));
  EXPECT_TRUE(is_reduced(families::two_gon()));
  // A truncated vertex inside a 3-gon breaks reducedness.
  BrauerConfig bad = parse_config(
      "vertex 1\nvertex 2\nvertex t\npolygon V : 1 2 t\npolygon W : 1 2\n"
      "order 1 : V W\norder 2 : V W\n");
  EXPECT_TRUE(validate(bad).valid());
  EXPECT_FALSE(is_reduced(bad));
}

TEST(Connected, Examples) {
  EXPECT_TRUE(is_connected(families::square()));
  EXPECT_TRUE(is_connected(families::cycle(4, 2)));
  BrauerConfig split = parse_config(
      "vertex 1 mult 2\nvertex 2 mult 2\npolygon V : 1 1\npolygon W : 2 2\n"
      "order 1 : V V\norder 2 : W W\n");
  EXPECT_TRUE(validate(split).valid());
  EXPECT_FALSE(is_connected(split));
}

TEST(Serialize, RoundTripsFixtures) {
  for (const BrauerConfig& cfg :
       {families::square(), families::cycle(5, 3), families::self_loop(2), families::two_five(),
        families::two_gon()}) {
    EXPECT_EQ(parse_config(serialize(cfg)), cfg);
  }
}

TEST(Serialize, RoundTripsRandomConfigs) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    BrauerConfig cfg = generate_random({.polygon_count = 5, .max_multiplicity = 3, .seed = seed});
    EXPECT_EQ(parse_config(serialize(cfg)), cfg) << "seed " << seed;
  }
}

TEST(Generate, SmallestCase) {
  BrauerConfig cfg = generate_random({.polygon_count = 1, .max_polygon_size = 2,
                                      .max_multiplicity = 3, .seed = 5});
  EXPECT_EQ(cfg.polygon_count(), 1);
  EXPECT_TRUE(validate(cfg).valid());
}

TEST(Generate, OutputIsValidReducedConnected) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    BrauerConfig cfg = generate_random({.polygon_count = 1 + static_cast<int>(seed % 7),
                                        .max_polygon_size = 4,
                                        .max_multiplicity = 1 + static_cast<int>(seed % 3),
                                        .seed = seed});
    EXPECT_TRUE(validate(cfg).valid()) << "seed " << seed;
    EXPECT_TRUE(is_reduced(cfg)) << "seed " << seed;
    EXPECT_TRUE(is_connected(cfg)) << "seed " << seed;
  }
}

TEST(Generate, DeterministicForFixedSeed) {
  RandomConfigParams params{.polygon_count = 4, .max_polygon_size = 4, .max_multiplicity = 2,
                            .seed = 42};
  EXPECT_EQ(generate_random(params), generate_random(params));
  EXPECT_EQ(serialize(generate_random(params)), serialize(generate_random(params)));
}

TEST(Generate, RespectsValencyCap) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    BrauerConfig cfg = generate_random({.polygon_count = 8, .max_polygon_size = 4,
                                        .max_multiplicity = 3, .seed = seed, .valency_cap = 6});
    for (int v = 0; v < cfg.vertex_count(); ++v) EXPECT_LE(cfg.val(v), 6);
  }
}

TEST(Generate, RejectsBadParams) {
  EXPECT_THROW(generate_random({.polygon_count = 0}), std::invalid_argument);
  EXPECT_THROW(generate_random({.max_polygon_size = 1}), std::invalid_argument);
}

TEST(GenerateTree, ShapeAndHypotheses) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    BrauerConfig cfg = generate_random_tree({.edge_count = 1 + static_cast<int>(seed % 8),
                                             .max_multiplicity = 3, .seed = seed});
    EXPECT_TRUE(validate(cfg).valid()) << "seed " << seed;
    EXPECT_TRUE(is_reduced(cfg)) << "seed " << seed;
    EXPECT_TRUE(is_connected(cfg)) << "seed " << seed;
    for (int p = 0; p < cfg.polygon_count(); ++p) {
      EXPECT_EQ(cfg.polygon_members(p).size(), 2u);
    }
    EXPECT_EQ(cfg.vertex_count(), cfg.polygon_count() + 1);
  }
}
