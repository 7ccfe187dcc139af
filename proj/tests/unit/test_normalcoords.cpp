#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "corpus.hpp"
#include "flatsphere/delaunay.hpp"
#include "flatsphere/normalcoords.hpp"

using namespace flatsphere;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

}  // namespace

TEST(Encode, AltitudeHasSingleCrossing) {
  const auto s = testkit::doubled_equilateral();
  const auto r = enumerate_saddle_connections(s, {.max_length = 1.8});
  ASSERT_EQ(r.connections.size(), 6u);
  for (const auto& c : r.connections) {
    const auto nc = encode_normal(s, c);
    if (c.is_edge()) {
      EXPECT_TRUE(nc.is_edge());
      EXPECT_EQ(s.edge_id(s.edge_slot(nc.edge_id)), nc.edge_id);
      EXPECT_TRUE(decode_normal(s, nc).empty());
      continue;
    }
    EXPECT_EQ(std::count(nc.counts.begin(), nc.counts.end(), 1), 1);
    EXPECT_EQ(std::count(nc.counts.begin(), nc.counts.end(), 0), 2);
    EXPECT_EQ(decode_normal(s, nc), c.crossings);
  }
}

TEST(Encode, RejectsNonSimple) {
  const auto s = testkit::doubled_thin();
  const auto r = enumerate_saddle_connections(s, {.max_length = 3.0});
  int rejected = 0;
  for (const auto& c : r.connections) {
    if (count_self_intersections(to_trajectory(s, c)) == 0) continue;
    EXPECT_EQ(code_of([&] { encode_normal(s, c); }), ErrorCode::Domain);
    ++rejected;
  }
  EXPECT_GT(rejected, 0);
}

TEST(Decode, RoundTripAndInjectivityOnCorpus) {
  for (const auto& [name, raw] : testkit::corpus(4, 11)) {
    SCOPED_TRACE(name);
    const auto s = delaunayize(normalize_area(raw)).surface;
    const auto r = enumerate_saddle_connections(s, {.max_length = 3.0});
    std::set<std::vector<std::int64_t>> keys;
    int simple = 0;
    for (const auto& c : r.connections) {
      if (count_self_intersections(to_trajectory(s, c)) != 0) continue;
      ++simple;
      const auto nc = encode_normal(s, c);
      if (!nc.is_edge()) {
        const auto back = decode_normal(s, nc);
        std::vector<EdgeSlot> rev;
        for (auto it = c.crossings.rbegin(); it != c.crossings.rend(); ++it) rev.push_back(s.partner(*it));
        EXPECT_TRUE(back == c.crossings || back == rev);
      }
      EXPECT_TRUE(keys.insert(injectivity_key(s, nc)).second);
    }
    EXPECT_GT(simple, 0);
  }
}

TEST(Decode, ParityFailure) {
  const auto s = testkit::doubled_equilateral();
  NormalCoordinate nc{{1, 1, 1}, {0, 0}, {1, 0}};
  EXPECT_EQ(code_of([&] { decode_normal(s, nc); }), ErrorCode::Inadmissible);
}

TEST(Decode, ZeroVector) {
  const auto s = testkit::doubled_equilateral();
  NormalCoordinate nc{{0, 0, 0}, {0, 0}, {1, 0}};
  EXPECT_EQ(code_of([&] { decode_normal(s, nc); }), ErrorCode::Inadmissible);
}

TEST(Decode, NegativeCount) {
  const auto s = testkit::doubled_equilateral();
  NormalCoordinate nc{{-1, 1, 0}, {0, 0}, {1, 0}};
  EXPECT_EQ(code_of([&] { decode_normal(s, nc); }), ErrorCode::Inadmissible);
}

TEST(Decode, ClosedCurveCountsHaveNoTerminal) {
  // Per-triangle counts 3, 4, 5 match up around every triangle but leave no room for an end arc.
  const auto s = testkit::doubled_equilateral();
  NormalCoordinate nc{{3, 4, 5}, {0, 0}, {1, 0}};
  EXPECT_EQ(code_of([&] { decode_normal(s, nc); }), ErrorCode::Inadmissible);
}

TEST(Compositions, SmallValues) {
  for (int n = 3; n < 9; ++n) {
    const auto c = weak_composition_count(0, n);
    ASSERT_TRUE(c.exact.has_value());
    EXPECT_EQ(*c.exact, 1u);
  }
  const auto c = weak_composition_count(2, 3);
  ASSERT_TRUE(c.exact.has_value());
  EXPECT_EQ(*c.exact, 6u);
  EXPECT_NEAR(std::exp2(c.log2_bound), 8.0, 1e-9);
  EXPECT_TRUE(c.below_bound);
  // C(k + 3n - 7, 3n - 7) for k = 5, n = 4: C(10, 5).
  EXPECT_EQ(*weak_composition_count(5, 4).exact, 252u);
}

TEST(Compositions, BoundHoldsOnGrid) {
  for (int n = 3; n < 20; ++n)
    for (std::int64_t k = 1; k < 2000; k = k * 3 + 1) {
      const auto c = weak_composition_count(k, n);
      EXPECT_TRUE(c.below_bound) << n << ' ' << k;
      EXPECT_LE(c.log2_count, c.log2_bound + 1e-9);
      if (c.exact) EXPECT_NEAR(std::log2(static_cast<double>(*c.exact)), c.log2_count, 1e-9);
    }
}

TEST(Compositions, HugeValuesStayInLogs) {
  const auto c = weak_composition_count(1'000'000'000, 60);
  EXPECT_FALSE(c.exact.has_value());
  EXPECT_TRUE(std::isfinite(c.log2_count));
  EXPECT_TRUE(c.below_bound);
}
