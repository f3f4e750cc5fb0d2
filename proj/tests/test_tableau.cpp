#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kron/tableau.hpp"
#include "kron/verify.hpp"

using namespace kron;

namespace {

KroneckerTableau T(const Partition& start, std::string_view text) { return parse_tableau(start, text); }

std::set<std::string> strings(const std::vector<KroneckerTableau>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.str());
  return out;
}

// Every step sequence over rows 0..rows, kept when it walks from start to nu.
std::vector<KroneckerTableau> brute_std(const Partition& start, const Partition& nu, int s, int rows) {
  std::vector<KroneckerTableau> out;
  std::vector<Step> path;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == s) {
      if (auto t = KroneckerTableau::make(start, path); t && t->end() == nu) out.push_back(*t);
      return;
    }
    for (int p = 0; p <= rows; ++p)
      for (int q = 0; q <= rows; ++q) {
        path.push_back({p, q});
        self(self);
        path.pop_back();
      }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Step, TextAndKinds) {
  EXPECT_EQ(Step::a(2).str(), "a2");
  EXPECT_EQ(Step::r(1).str(), "r1");
  EXPECT_EQ(Step::d(0).str(), "d0");
  EXPECT_EQ((Step{2, 3}).str(), "m(2,3)");
  EXPECT_EQ(Step::a(3).kind(), StepKind::MoveDown);
  EXPECT_EQ(Step::r(4).kind(), StepKind::MoveUp);
  EXPECT_EQ(Step::d(0).kind(), StepKind::Dummy);
  EXPECT_EQ((Step{3, 2}).kind(), StepKind::MoveUp);
  EXPECT_EQ((Step{2, 3}).kind(), StepKind::MoveDown);
  for (std::string s : {"a1", "r4", "d0", "d3", "m(2,3)", "m(4,1)"}) EXPECT_EQ(parse_step(s).str(), s);
  EXPECT_EQ(parse_step("m(0,2)"), Step::a(2));
  EXPECT_THROW(parse_step("x1"), Error);
  EXPECT_THROW(parse_step("a"), Error);
}

TEST(Tableau, ApplyStep) {
  EXPECT_EQ(apply_step(Partition({2, 1}), Step::d(0)), Partition({2, 1}));
  EXPECT_EQ(apply_step(Partition({2, 1}), Step::a(2)), Partition({2, 2}));
  EXPECT_EQ(apply_step(Partition(), Step::r(1)), std::nullopt);
  EXPECT_EQ(apply_step(Partition({2, 2}), Step::d(1)), std::nullopt);
  EXPECT_EQ(apply_step(Partition({2, 2}), Step::d(2)), Partition({2, 2}));
  EXPECT_EQ(apply_step(Partition({3, 2}), (Step{1, 3})), Partition({2, 2, 1}));
}

TEST(Tableau, LevelsAndText) {
  const auto t = T(Partition({4}), "r1·d1·a1");
  EXPECT_EQ(t.length(), 3);
  EXPECT_EQ(t.levels(), (std::vector<Partition>{Partition({4}), Partition({3}), Partition({3}), Partition({4})}));
  EXPECT_EQ(t.half_level(2), Partition({2}));
  EXPECT_EQ(t.end(), Partition({4}));
  EXPECT_EQ(t.removal_count(), 2);
  EXPECT_EQ(t.str(), "r1·d1·a1");
  EXPECT_EQ(T(Partition({4}), "r1.d1.a1"), t);
  EXPECT_EQ(KroneckerTableau(Partition({1}), {}).str(), std::string(kEmptyPath));
  EXPECT_THROW(T(Partition(), "r1"), Error);
  EXPECT_EQ(KroneckerTableau::make(Partition({1}), {Step::a(2), Step::a(2)}), std::nullopt);
}

TEST(Tableau, EnumerateStdSmall) {
  const auto one = enumerate_std(Partition(), Partition({1}), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].str(), "a1");

  std::set<Partition> reached;
  for (const auto& nu : partitions_up_to(4))
    if (!enumerate_std(Partition(), nu, 3).empty()) reached.insert(nu);
  EXPECT_EQ(reached, (std::set<Partition>{Partition(), Partition({1}), Partition({2}), Partition({1, 1}),
                                          Partition({3}), Partition({2, 1}), Partition({1, 1, 1})}));

  EXPECT_EQ(strings(enumerate_std(Partition({2, 1}), Partition({3, 3}), 3)),
            (std::set<std::string>{"a1·a2·a2", "a2·a1·a2"}));
}

TEST(Tableau, EnumerateStdMatchesBruteForce) {
  for (const auto& l : partitions_up_to(3))
    for (const auto& nu : partitions_up_to(3))
      for (int s = 0; s <= 3; ++s) {
        const auto fast = enumerate_std(l, nu, s);
        EXPECT_TRUE(std::is_sorted(fast.begin(), fast.end()));
        // a detour below the last row costs two steps, so one spare row suffices for s ≤ 3
        const int rows = std::max(l.length(), nu.length()) + 1;
        EXPECT_EQ(fast, brute_std(l, nu, s, rows)) << l << " -> " << nu << " s=" << s;
      }
}

TEST(Tableau, Std0Examples) {
  EXPECT_EQ(strings(enumerate_std0(Partition({4}), Partition({4}), 3)),
            (std::set<std::string>{"r1·d1·a1", "d1·r1·a1", "r1·a1·d1", "a1·r1·d1", "d1·a1·r1", "a1·d1·r1",
                                   "d1·d1·d1"}));
  EXPECT_EQ(strings(enumerate_std0(Partition({2, 1}), Partition({3, 3}), 3)),
            (std::set<std::string>{"a1·a2·a2", "a2·a1·a2"}));
  EXPECT_TRUE(enumerate_std0(Partition({1}), Partition({1}), 3).empty());
  try {
    enumerate_std0(Partition({2, 1}), Partition({2, 1}), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedFamily);
  }
}

TEST(Tableau, Std0OneRowFilter) {
  // against a filter over Std written out directly
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int s = 0; s <= 5; ++s) {
        const Partition l = a ? Partition({a}) : Partition();
        const Partition nu = b ? Partition({b}) : Partition();
        if (s == b - a) continue;
        std::vector<KroneckerTableau> want;
        for (const auto& t : enumerate_std(l, nu, s)) {
          bool ok = t.removal_count() <= a;
          for (const Step& st : t.steps()) ok = ok && (st == Step::r(1) || st == Step::d(1) || st == Step::a(1));
          if (ok) want.push_back(t);
        }
        EXPECT_EQ(enumerate_std0(l, nu, s), want) << a << " " << b << " " << s;
      }
}

TEST(Tableau, Swap) {
  EXPECT_EQ(swap(T(Partition({4}), "r1·d1·a1"), 1), T(Partition({4}), "d1·r1·a1"));
  EXPECT_EQ(swap(T(Partition({4}), "d1·d1·d1"), 2), T(Partition({4}), "d1·d1·d1"));
  EXPECT_EQ(swap(T(Partition({2, 1}), "a2·a1·a2"), 2), std::nullopt);
  EXPECT_THROW(swap(T(Partition({4}), "d1·d1·d1"), 3), Error);
  EXPECT_THROW(swap(T(Partition({4}), "d1·d1·d1"), 0), Error);
}

TEST(Tableau, SwapInvariantsOnStd0) {
  for (const auto& [l, nu, s] : supported_triples(5, 5)) {
    const auto std0 = enumerate_std0(l, nu, s);
    const std::set<KroneckerTableau> in(std0.begin(), std0.end());
    const auto all = enumerate_std(l, nu, s);
    const std::set<KroneckerTableau> std_set(all.begin(), all.end());
    for (const auto& t : std0) {
      ASSERT_TRUE(std_set.contains(t)) << t.str();
      ASSERT_EQ(t.end(), nu);
      auto cur = t.start();
      for (const Step& st : t.steps()) {
        auto next = apply_step(cur, st);
        ASSERT_TRUE(next.has_value());
        cur = *next;
      }
      for (int k = 1; k < t.length(); ++k) {
        auto u = swap(t, k);
        if (!u) continue;
        EXPECT_TRUE(in.contains(*u)) << t.str() << " k=" << k;
        EXPECT_EQ(swap(*u, k), t);
      }
    }
  }
}

TEST(Tableau, MaximalDepthPathsArePureAdds) {
  for (const auto& nu : partitions_up_to(7))
    for (const auto& l : partitions_up_to(nu.size())) {
      if (!contains(l, nu)) continue;
      for (const auto& t : enumerate_std(l, nu, nu.size() - l.size()))
        for (const Step& st : t.steps()) ASSERT_TRUE(st.remove_row == 0 && st.add_row > 0) << t.str();
    }
}

TEST(Tableau, MostDominant) {
  EXPECT_EQ(most_dominant(Partition({2, 1}), 4).str(), "d0·a1·a1·a2");
  EXPECT_EQ(most_dominant(Partition(), 2).str(), "d0·d0");
  EXPECT_EQ(most_dominant(Partition({1}), 1).str(), "a1");
  try {
    most_dominant(Partition({2, 1}), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InsufficientLength);
  }
}

TEST(Tableau, MostDominantDominatesStd) {
  for (int r = 0; r <= 5; ++r)
    for (const auto& l : partitions_up_to(std::min(r, 4))) {
      const auto top = most_dominant(l, r);
      const auto all = enumerate_std(Partition(), l, r);
      ASSERT_FALSE(all.empty());
      for (const auto& t : all) {
        const Dominance d = tableau_dominance(top, t);
        EXPECT_TRUE(d == Dominance::Greater || d == Dominance::Equal) << top.str() << " vs " << t.str();
      }
    }
}

TEST(Tableau, TableauDominance) {
  const auto t1 = T(Partition({2, 1}), "a1·a2·a2");
  const auto t2 = T(Partition({2, 1}), "a2·a1·a2");
  EXPECT_EQ(tableau_dominance(t1, t2), Dominance::Greater);
  EXPECT_EQ(tableau_dominance(t2, t1), Dominance::Less);
  EXPECT_EQ(tableau_dominance(t1, t1), Dominance::Equal);
  EXPECT_THROW(tableau_dominance(t1, T(Partition({2, 1}), "a1")), Error);
}

TEST(Tableau, Classify) {
  EXPECT_EQ(classify(Partition({2, 1}), Partition({3, 3, 2}), Partition({2, 2, 1})).tag, TripleClass::MaximalDepth);
  EXPECT_EQ(classify(Partition({4}), Partition({4}), Partition({2, 2, 1})).tag, TripleClass::OneRowPair);
  const auto st = classify(Partition({2, 1}), Partition({2, 1}), Partition({1}));
  EXPECT_EQ(st.tag, TripleClass::CoPieriStaircase);
  EXPECT_EQ(st.staircase_d, 1);
  EXPECT_EQ(st.staircase_l, 2);
  EXPECT_EQ(classify(Partition({7, 5, 1, 1}), Partition({5, 3, 3}), Partition({2, 2, 1})).tag,
            TripleClass::CoPieriHorizontal);
  EXPECT_EQ(classify(Partition({2, 1}), Partition({2, 1}), Partition({2})).tag, TripleClass::Unknown);
  // a one-row maximal-depth triple routes to the classical branch
  EXPECT_EQ(classify(Partition({1}), Partition({3}), Partition({2})).tag, TripleClass::MaximalDepth);
  EXPECT_TRUE(classify(Partition({3}), Partition({1}), Partition({2})).supported_by_copieri());
  EXPECT_EQ(staircase_parameters(Partition({6, 4, 2})), (std::pair{2, 3}));
  EXPECT_EQ(staircase_parameters(Partition({3, 2})), std::nullopt);
}
