// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/recolour.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "../support/oracle.hpp"
#include "../support/random_valid.hpp"
#include "sigmahg/constructions.hpp"
#include "sigmahg/error.hpp"
#include "sigmahg/profile.hpp"

namespace sigmahg {
namespace {

SigmaInstance make(int n, int r, int q, std::vector<int> sigma) {
  return SigmaInstance::create(n, r, q, Partition::normalize(std::move(sigma)));
}

using Classes = std::vector<std::vector<int>>;

Colouring classes(Classes c) { return Colouring::from_classes(c); }

void expect_precondition(const std::function<void()>& f) {
  try {
    f();
    FAIL() << "expected a precondition error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition) << e.what();
  }
}

TEST(CollapseClass, Example) {
  const auto h = make(4, 4, 2, {2, 2});
  const auto out = collapse_class(h, classes({{1, 2}, {1, 2}, {3, 3}, {4, 4}}), 0);
  EXPECT_EQ(out.classes(), (Classes{{5, 5}, {1, 2}, {3, 3}, {4, 4}}));
  EXPECT_EQ(check_explicit(h, out, ColourBounds::nmnr(4)).status, VerdictStatus::valid);
}

TEST(CollapseClass, MonochromaticSharedClass) {
  const auto h = make(5, 4, 2, {2, 2});
  const auto col = classes({{1, 1}, {2, 2}, {1, 2}, {3, 3}, {1, 3}});
  ASSERT_TRUE(is_valid(h, col, ColourBounds::nmnr(4)));
  const auto out = collapse_class(h, col, 0);
  EXPECT_EQ(out.colours_used(), col.colours_used() + 1);
  EXPECT_TRUE(is_valid(h, out, ColourBounds::nmnr(4)));
}

TEST(CollapseClass, Refusals) {
  expect_precondition([] {
    collapse_class(make(5, 3, 2, {2, 1}), classes({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}), 0);
  });
  // Constant colouring is not NMNR-valid.
  expect_precondition([] { collapse_class(make(4, 4, 2, {2, 2}), classes({{1, 1}, {1, 1}, {1, 1}, {1, 1}}), 0); });
  expect_precondition([] { collapse_class(make(4, 4, 2, {2, 2}), classes({{1, 2}, {1, 2}, {3, 3}, {4, 4}}), 4); });
}

TEST(MergePrivateColours, Example) {
  const auto h = make(3, 6, 3, {3, 3});
  const auto col = classes({{1, 2, 3}, {4, 4, 4}, {5, 5, 5}});
  ASSERT_TRUE(is_valid(h, col, ColourBounds::nmnr(6)));
  const auto out = merge_private_colours(h, col, 0, 1, 2);
  EXPECT_EQ(out.colours_used(), 4);
  // {6,6,3} renormalised: 3 -> 1, 4 -> 2, 5 -> 3, 6 -> 4.
  EXPECT_EQ(out.classes(), (Classes{{4, 4, 1}, {2, 2, 2}, {3, 3, 3}}));
  EXPECT_EQ(check_explicit(h, out, ColourBounds::nmnr(6)).status, VerdictStatus::valid);
}

TEST(MergePrivateColours, Refusals) {
  const auto h = make(4, 4, 2, {2, 2});
  const auto col = classes({{1, 2}, {1, 3}, {4, 4}, {5, 5}});
  ASSERT_TRUE(is_valid(h, col, ColourBounds::nmnr(4)));
  try {
    merge_private_colours(h, col, 0, 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
    EXPECT_NE(std::string(e.what()).find("classes 1"), std::string::npos) << e.what();
  }
  expect_precondition([&] { merge_private_colours(h, col, 0, 2, 2); });
  expect_precondition([&] { merge_private_colours(h, col, 0, 2, 4); });
}

TEST(PrivateColours, Basic) {
  const auto col = classes({{1, 2}, {1, 3}, {4, 4}});
  EXPECT_EQ(private_colours(col, 0), (std::vector<int>{2}));
  EXPECT_EQ(private_colours(col, 1), (std::vector<int>{3}));
  EXPECT_EQ(private_colours(col, 2), (std::vector<int>{4}));
}

TEST(SpectrumWalk, DownReachesAdjacentK) {
  const auto h = make(3, 6, 3, {3, 3});
  const auto col = classes({{1, 2, 3}, {4, 4, 4}, {5, 5, 5}});
  const auto trace = spectrum_walk(h, col, WalkDirection::down, 4);
  EXPECT_EQ(trace.terminal, WalkTerminal::target_reached);
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(trace.steps[0].transform, WalkTransform::merge);
  EXPECT_EQ(trace.steps[0].colours, (std::vector<int>{1, 2}));
  EXPECT_EQ(trace.final_colouring.colours_used(), 4);
}

TEST(SpectrumWalk, AllMonochromaticStopsImmediately) {
  const auto h = make(4, 4, 2, {2, 2});
  const auto high = two_two_colouring(h, Scheme::two_two_high);
  const auto trace = spectrum_walk(h, high, WalkDirection::down, 3);
  EXPECT_EQ(trace.terminal, WalkTerminal::no_rule_applies);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(trace.final_colouring, high);
}

TEST(SpectrumWalk, UpAndLimitAndRefusals) {
  const auto h = make(4, 4, 2, {2, 2});
  const auto col = classes({{1, 2}, {1, 2}, {1, 2}, {1, 2}});
  ASSERT_TRUE(is_valid(h, col, ColourBounds::nmnr(4)));
  auto trace = spectrum_walk(h, col, WalkDirection::up, 3);
  EXPECT_EQ(trace.terminal, WalkTerminal::target_reached);
  EXPECT_EQ(trace.final_colouring.colours_used(), 3);
  trace = spectrum_walk(h, col, WalkDirection::up, 4, 0);
  EXPECT_EQ(trace.terminal, WalkTerminal::limit);
  expect_precondition([&] { spectrum_walk(h, col, WalkDirection::down, 3); });
  expect_precondition([] {
    spectrum_walk(make(5, 3, 2, {2, 1}), classes({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}),
                  WalkDirection::down, 2);
  });
}

std::vector<SigmaInstance> delta_two_instances(int max_nq) {
  std::vector<SigmaInstance> out;
  for (const auto& h : oracle::small_instances(max_nq, max_nq, false))
    if (h.sigma().smallest() >= 2) out.push_back(h);
  return out;
}

// Lemma moves on random valid colourings; k formula for collapse; walk
// traces only visit valid colourings and move k by at most one per step.
TEST(RecolourProperty, LemmasOnRandomValidColourings) {
  std::mt19937_64 rng(77);
  const auto insts = delta_two_instances(16);
  ASSERT_FALSE(insts.empty());
  int checked = 0;
  for (const auto& h : insts) {
    const auto b = ColourBounds::nmnr(h.r());
    for (const auto& seed : support::seed_witnesses(h, b)) {
      for (int rep = 0; rep < 4; ++rep) {
        const auto col = support::perturb(h, seed, b, 30, rng);
        for (int i = 0; i < h.n(); ++i) {
          const auto priv = private_colours(col, i);
          const auto out = collapse_class(h, col, i);
          ASSERT_TRUE(is_valid(h, out, b));
          ASSERT_EQ(out.colours_used(), col.colours_used() - static_cast<int>(priv.size()) + 1);
          if (h.vertex_count() <= 12) ASSERT_EQ(check_explicit(h, out, b).status, VerdictStatus::valid);
          for (std::size_t x = 0; x < priv.size(); ++x) {
            for (std::size_t y = x + 1; y < priv.size(); ++y) {
              const auto m = merge_private_colours(h, col, i, priv[x], priv[y]);
              ASSERT_TRUE(is_valid(h, m, b));
              ASSERT_EQ(m.colours_used(), col.colours_used() - 1);
            }
          }
          ++checked;
        }
        for (auto dir : {WalkDirection::down, WalkDirection::up}) {
          const int target = dir == WalkDirection::down ? 1 : h.vertex_count();
          const auto trace = spectrum_walk(h, col, dir, target, 50);
          int k = col.colours_used();
          for (const auto& st : trace.steps) {
            ASSERT_LE(std::abs(st.k - k), 1);
            ASSERT_TRUE(is_valid(h, st.colouring, b));
            k = st.k;
          }
        }
      }
    }
  }
  EXPECT_GE(checked, 1000);
}

}  // namespace
}  // namespace sigmahg
