#include <gtest/gtest.h>

#include "kron/partition.hpp"

using namespace kron;

namespace {

// Raw partial sums Σ_{i≤j}, no padding.
bool partial_sums_ge(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (int j = 1; j <= std::max(a.length(), b.length()); ++j) {
    sa += a.row(j);
    sb += b.row(j);
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace

TEST(Partition, NormalizesAndRejects) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition().size(), 0);
  EXPECT_EQ(Partition().length(), 0);
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, -1}), Error);
  EXPECT_EQ(Partition({3, 3, 2}).size(), 8);
  EXPECT_EQ(Partition({3, 3, 2}).row(4), 0);
}

TEST(Partition, Parse) {
  EXPECT_EQ(parse_partition("3,3,2"), Partition({3, 3, 2}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_EQ(parse_partition("0"), Partition());
  for (const char* bad : {"1,2", "2,0,1", "a", "2,,1", "-1", "3,", " 4"}) {
    try {
      parse_partition(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
  EXPECT_EQ(Partition({3, 3, 2}).str(), "3,3,2");
  EXPECT_EQ(parse_partition(Partition({5, 2, 2, 1}).str()), Partition({5, 2, 2, 1}));
}

TEST(Partition, Contains) {
  EXPECT_TRUE(contains(Partition(), Partition({3, 1})));
  EXPECT_TRUE(contains(Partition({2, 1}), Partition({3, 3, 2})));
  EXPECT_FALSE(contains(Partition({2, 2}), Partition({3, 1})));
}

TEST(Partition, Intersect) {
  EXPECT_EQ(intersect(Partition({7, 5, 1, 1}), Partition({6, 3, 3})), Partition({6, 3, 1}));
  EXPECT_EQ(intersect(Partition({4}), Partition({4})), Partition({4}));
  EXPECT_EQ(intersect(Partition(), Partition({2, 1})), Partition());
}

TEST(Partition, IntersectIsGreatestCommonSubpartition) {
  const auto all = partitions_up_to(6);
  for (const auto& a : all)
    for (const auto& b : all) {
      const Partition c = intersect(a, b);
      ASSERT_TRUE(contains(c, a) && contains(c, b));
      for (const auto& g : all) {
        if (!contains(g, a) || !contains(g, b)) continue;
        EXPECT_TRUE(contains(g, c)) << a << b << g;
        EXPECT_TRUE(partial_sums_ge(c, g)) << a << b << g;
      }
    }
}

TEST(Partition, DominanceExamples) {
  EXPECT_EQ(dominance(Partition({3}), Partition({2, 1})), Dominance::Greater);
  EXPECT_EQ(dominance(Partition({2, 2}), Partition({3, 1})), Dominance::Less);
  EXPECT_EQ(dominance(Partition({3, 1, 1}), Partition({2, 2, 2})), Dominance::Greater);
  EXPECT_EQ(dominance(Partition({4, 2}), Partition({3, 3})), Dominance::Greater);
  EXPECT_EQ(dominance(Partition({3, 1, 1, 1}), Partition({2, 2, 2})), Dominance::Incomparable);
  EXPECT_EQ(dominance(Partition({2, 1}), Partition({2, 1})), Dominance::Equal);
  // unequal sizes compare after padding: fewer boxes below the first row wins
  EXPECT_EQ(dominance(Partition(), Partition({1})), Dominance::Greater);
  EXPECT_EQ(dominance(Partition({2}), Partition({1, 1})), Dominance::Greater);
}

TEST(Partition, DominanceAgreesWithPartialSumsAtEqualSize) {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        const bool ge = partial_sums_ge(a, b), le = partial_sums_ge(b, a);
        const Dominance want = ge && le ? Dominance::Equal
                               : ge     ? Dominance::Greater
                               : le     ? Dominance::Less
                                        : Dominance::Incomparable;
        EXPECT_EQ(dominance(a, b), want) << a << " vs " << b;
      }
  }
}

TEST(Partition, DominanceIsPartialOrder) {
  const auto all = partitions_up_to(8);
  auto ge = [](const Partition& a, const Partition& b) {
    const Dominance d = dominance(a, b);
    return d == Dominance::Equal || d == Dominance::Greater;
  };
  for (const auto& a : all) {
    EXPECT_EQ(dominance(a, a), Dominance::Equal);
    for (const auto& b : all) {
      const Dominance d = dominance(a, b);
      const Dominance r = dominance(b, a);
      if (d == Dominance::Greater) { EXPECT_EQ(r, Dominance::Less); }
      if (d == Dominance::Incomparable) { EXPECT_EQ(r, Dominance::Incomparable); }
      if (d == Dominance::Equal) { EXPECT_EQ(a, b); }
    }
  }
  // transitivity over a size ≤ 6 cube keeps the run short
  const auto small = partitions_up_to(6);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (!ge(a, b)) continue;
      for (const auto& c : small)
        if (ge(b, c)) { EXPECT_TRUE(ge(a, c)) << a << b << c; }
    }
}

TEST(Partition, Pad) {
  EXPECT_EQ(pad(Partition({2, 1}), 6), Partition({3, 2, 1}));
  EXPECT_EQ(pad(Partition({4}), 9), Partition({5, 4}));
  try {
    pad(Partition({2, 1}), 4);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FirstRowTooShort);
  }
  EXPECT_EQ(min_pad(Partition({2, 1})), 5);
}

TEST(Partition, PadStripRoundTrip) {
  for (const auto& l : partitions_up_to(6))
    for (int n = min_pad(l); n <= min_pad(l) + 4; ++n) {
      const Partition p = pad(l, n);
      EXPECT_EQ(p.size(), n);
      EXPECT_EQ(depth(p), l.size());
      EXPECT_EQ(strip_first_row(p), l);
    }
}

TEST(Partition, AddRemoveBox) {
  EXPECT_EQ(add_box(Partition({2, 1}), 2), Partition({2, 2}));
  EXPECT_EQ(add_box(Partition({2, 1}), 3), Partition({2, 1, 1}));
  EXPECT_EQ(add_box(Partition({2, 1}), 4), std::nullopt);
  EXPECT_EQ(remove_box(Partition({2, 1}), 1), Partition({1, 1}));
  EXPECT_EQ(remove_box(Partition({2, 2}), 1), std::nullopt);
  EXPECT_EQ(remove_box(Partition({2, 1}), 2), Partition({2}));
  EXPECT_EQ(remove_box(Partition(), 1), std::nullopt);
  EXPECT_THROW(add_box(Partition(), 0), Error);
}

TEST(Partition, AddRemoveInverse) {
  for (const auto& l : partitions_up_to(7))
    for (int i = 1; i <= l.length() + 1; ++i) {
      if (auto up = add_box(l, i)) { EXPECT_EQ(remove_box(*up, i), l); }
      if (auto down = remove_box(l, i)) { EXPECT_EQ(add_box(*down, i), l); }
    }
}

TEST(Partition, HorizontalStrip) {
  EXPECT_TRUE(horizontal_strip({Partition({6, 3, 3}), Partition({6, 3, 1})}));
  EXPECT_FALSE(horizontal_strip({Partition({3, 3}), Partition({2, 1})}));
  EXPECT_TRUE(horizontal_strip({Partition({3, 2}), Partition({3, 2})}));
  try {
    horizontal_strip({Partition({2}), Partition({3})});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotContained);
  }
}

TEST(Partition, Generators) {
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), counts[n]);
  EXPECT_EQ(partitions_of(4).front(), Partition({4}));
  EXPECT_EQ(partitions_of(4).back(), Partition({1, 1, 1, 1}));
}
