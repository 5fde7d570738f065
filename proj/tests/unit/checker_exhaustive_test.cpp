// SPDX-License-Identifier: Apache-2.0
// check_fast against check_explicit on every surjective colouring (any k) of
// every instance with nq <= 10.
#include <gtest/gtest.h>

#include "sigmahg/profile.hpp"
#include "support/oracle.hpp"

namespace sigmahg {
namespace {

long run(const std::function<ColourBounds(int)>& bounds_for) {
  long checks = 0;
  for (const auto& h : oracle::small_instances(10, 10, true)) {
    const auto b = bounds_for(h.r());
    oracle::for_each_rgs(h.vertex_count(), h.vertex_count(), [&](const std::vector<int>& a) {
      const auto col = Colouring::normalized(h.n(), h.q(), a);
      const auto fast = check_fast(h, col, b).status;
      const auto slow = check_explicit(h, col, b).status;
      ++checks;
      ASSERT_EQ(fast, slow) << h.to_string() << " k=" << col.colours_used();
    });
  }
  return checks;
}

TEST(CheckerExhaustive, NmnrAllColourings) {
  EXPECT_GT(run([](int r) { return ColourBounds::nmnr(r); }), 0);
}

TEST(CheckerExhaustive, ClassicalAllColourings) {
  EXPECT_GT(run([](int r) { return ColourBounds::classical(r); }), 0);
}

}  // namespace
}  // namespace sigmahg
