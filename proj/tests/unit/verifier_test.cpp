// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/verifier.hpp"

#include <gtest/gtest.h>

namespace sigmahg {
namespace {

SigmaInstance make(int n, int r, int q, std::vector<int> sigma) {
  return SigmaInstance::create(n, r, q, Partition::normalize(std::move(sigma)));
}

std::vector<const Claim*> of_kind(const std::vector<Claim>& claims, ClaimKind kind, bool active_only = true) {
  std::vector<const Claim*> out;
  for (const auto& c : claims)
    if (c.kind == kind && (!active_only || c.active())) out.push_back(&c);
  return out;
}

KSet union_of(const std::vector<const Claim*>& cs) {
  KSet out;
  for (const auto* c : cs)
    for (const auto& iv : c->ks.intervals()) out.add(iv.lo, iv.hi);
  return out;
}

TEST(KSet, UnionAndText) {
  KSet s = KSet::interval(7, 13);
  s.add(2, 2).add(3, 3);
  EXPECT_EQ(s.to_string(), "[2,3] ∪ [7,13]");
  EXPECT_TRUE(s.contains(8));
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(s.max(), 13);
  EXPECT_EQ(KSet::single(2).add(5, 5).to_string(), "{2} ∪ {5}");
  EXPECT_EQ(KSet().to_string(), "∅");
  EXPECT_TRUE(KSet::interval(3, 2).empty());
}

TEST(PredictClaims, NonColourableFamily) {
  const auto claims = predict_claims(make(5, 3, 1, {1, 1, 1}), ColourBounds::nmnr(3));
  const auto empty = of_kind(claims, ClaimKind::empty_spectrum);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0]->source, "sigma-noncolourable");

  const auto small = predict_claims(make(4, 3, 1, {1, 1, 1}), ColourBounds::nmnr(3));
  ASSERT_EQ(of_kind(small, ClaimKind::empty_spectrum, false).size(), 1u);
  EXPECT_FALSE(small[0].active());
  EXPECT_EQ(small[0].failed_preconditions(), (std::vector<std::string>{"n >= (r-1)^2+1"}));
}

TEST(PredictClaims, SmallRFamily) {
  const auto claims = predict_claims(SigmaInstance::h2n(13, 4), ColourBounds::nmnr(4));
  std::vector<const Claim*> yes, no;
  for (const auto& c : claims) {
    if (c.source != "h2n-small-r") continue;
    EXPECT_TRUE(c.active());
    if (c.kind == ClaimKind::colourable) yes.push_back(&c);
    if (c.kind == ClaimKind::not_colourable) no.push_back(&c);
  }
  EXPECT_EQ(union_of(yes).to_string(), "[2,3] ∪ [7,13]");
  EXPECT_EQ(union_of(no).to_string(), "{1} ∪ [4,6] ∪ [14,26]");
}

TEST(PredictClaims, TwoTwoFamilyOnlyUnderTwoTwoBounds) {
  const auto h = make(4, 4, 2, {2, 2});
  auto claims = predict_claims(h, {2, 2});
  EXPECT_EQ(union_of(of_kind(claims, ClaimKind::colourable)).to_string(), "{2} ∪ {4}");
  EXPECT_EQ(union_of(of_kind(claims, ClaimKind::not_colourable)).to_string(), "{3}");
  for (const auto& c : claims) EXPECT_EQ(c.source, "two-two-gap");

  claims = predict_claims(h, ColourBounds::nmnr(4));
  for (const auto& c : claims) EXPECT_NE(c.source, "two-two-gap");
  EXPECT_EQ(of_kind(claims, ClaimKind::no_gap).size(), 1u);

  EXPECT_TRUE(predict_claims(h, ColourBounds::classical(4)).empty());
}

TEST(PredictClaims, GapTheoremPreconditionsAreStrict) {
  auto claims = predict_claims(make(11, 4, 3, {2, 1, 1}), ColourBounds::nmnr(4));
  bool seen = false;
  for (const auto& c : claims) {
    if (c.source != "gap-delta-one") continue;
    seen = true;
    EXPECT_FALSE(c.active());
    EXPECT_EQ(c.failed_preconditions(), (std::vector<std::string>{"n > r(s-1)+s"}));
  }
  EXPECT_TRUE(seen);

  claims = predict_claims(make(12, 4, 3, {2, 1, 1}), ColourBounds::nmnr(4));
  std::vector<const Claim*> active;
  for (const auto& c : claims)
    if (c.source == "gap-delta-one") active.push_back(&c);
  ASSERT_EQ(active.size(), 4u);
  for (const auto* c : active) EXPECT_TRUE(c->active());
  EXPECT_EQ(active[0]->ks.to_string(), "[1,2]");
  EXPECT_EQ(active[1]->ks.to_string(), "{3}");
  EXPECT_EQ(active[2]->ks.to_string(), "{4}");
  EXPECT_EQ(active[3]->ks.to_string(), "[6,12]");

  claims = predict_claims(make(13, 4, 2, {2, 1, 1}), ColourBounds::nmnr(4));
  for (const auto& c : claims) {
    if (c.source == "gap-delta-one") {
      EXPECT_EQ(c.failed_preconditions(), (std::vector<std::string>{"q = (r-1)(delta_max-1)"}));
    }
  }
}

TEST(PredictClaims, LargeRFamily) {
  const auto claims = predict_claims(SigmaInstance::h2n(61, 7), ColourBounds::nmnr(7));
  KSet yes, no;
  for (const auto& c : claims) {
    if (c.source != "h2n-large-r") continue;
    EXPECT_TRUE(c.active());
    for (const auto& iv : c.ks.intervals()) (c.kind == ClaimKind::colourable ? yes : no).add(iv.lo, iv.hi);
  }
  EXPECT_EQ(yes.to_string(), "[2,8] ∪ [13,61]");
  EXPECT_EQ(no.to_string(), "[9,12] ∪ [62,122]");
}

TEST(VerifyInstance, HTwoNThree) {
  const auto rep = verify_instance(make(5, 3, 2, {2, 1}), ColourBounds::nmnr(3));
  EXPECT_EQ(rep.count(ClaimStatus::refuted), 0);
  EXPECT_EQ(rep.count(ClaimStatus::undecided), 0);
  for (const auto& r : rep.results) {
    if (r.claim.active()) EXPECT_EQ(r.status, ClaimStatus::confirmed) << r.claim.source;
  }
  ASSERT_TRUE(rep.spectrum);
  EXPECT_EQ(rep.spectrum->members(), (std::vector<int>{2, 5}));
}

TEST(VerifyInstance, TwoTwoGapConfirmed) {
  const auto rep = verify_instance(make(4, 4, 2, {2, 2}), {2, 2});
  EXPECT_FALSE(rep.any_refuted());
  bool gap = false;
  for (const auto& r : rep.results) {
    EXPECT_EQ(r.status, ClaimStatus::confirmed);
    if (r.claim.kind == ClaimKind::not_colourable && r.claim.ks.contains(3)) gap = true;
  }
  EXPECT_TRUE(gap);
}

TEST(VerifyInstance, NoGapConfirmedNmnr) {
  const auto rep = verify_instance(make(4, 4, 2, {2, 2}), ColourBounds::nmnr(4));
  bool no_gap = false;
  for (const auto& r : rep.results) {
    if (r.claim.kind == ClaimKind::no_gap) {
      no_gap = true;
      EXPECT_EQ(r.status, ClaimStatus::confirmed);
    }
  }
  EXPECT_TRUE(no_gap);
  ASSERT_TRUE(rep.spectrum);
  EXPECT_EQ(rep.spectrum->k_max, 8);
}

TEST(VerifyInstance, TheoremSilentRangeAndBudget) {
  const auto h = make(12, 4, 3, {2, 1, 1});
  auto rep = verify_instance(h, ColourBounds::nmnr(4));
  EXPECT_FALSE(rep.any_refuted());
  EXPECT_EQ(rep.count(ClaimStatus::undecided), 0);
  ASSERT_TRUE(rep.theorem_silent);
  EXPECT_EQ(*rep.theorem_silent, (KInterval{5, 5}));

  rep = verify_instance(h, ColourBounds::nmnr(4), 5);
  EXPECT_FALSE(rep.any_refuted());
  EXPECT_GT(rep.count(ClaimStatus::undecided), 0);
}

TEST(VerifyInstance, InactiveClaimsCarryReasons) {
  const auto rep = verify_instance(make(4, 3, 1, {1, 1, 1}), ColourBounds::nmnr(3));
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_EQ(rep.results[0].status, ClaimStatus::inactive);
  EXPECT_NE(rep.results[0].evidence.find("n >= (r-1)^2+1"), std::string::npos);
  EXPECT_FALSE(rep.spectrum);
}

TEST(VerifyInstance, FixturesHaveNoRefutations) {
  struct Case {
    SigmaInstance inst;
    ColourBounds bounds;
  };
  const Case cases[] = {
      {make(5, 3, 2, {2, 1}), ColourBounds::nmnr(3)},       {make(5, 3, 1, {1, 1, 1}), ColourBounds::nmnr(3)},
      {SigmaInstance::h2n(13, 4), ColourBounds::nmnr(4)},   {make(12, 4, 3, {2, 1, 1}), ColourBounds::nmnr(4)},
      {make(4, 4, 2, {2, 2}), {2, 2}},                      {make(4, 4, 2, {2, 2}), ColourBounds::nmnr(4)},
      {make(6, 4, 2, {2, 2}), {2, 2}},                      {make(3, 6, 3, {3, 3}), ColourBounds::nmnr(6)},
      {make(6, 3, 2, {2, 1}), ColourBounds::nmnr(3)},
  };
  for (const auto& c : cases) {
    const auto rep = verify_instance(c.inst, c.bounds);
    EXPECT_FALSE(rep.any_refuted()) << c.inst.to_string();
    EXPECT_EQ(rep.count(ClaimStatus::undecided), 0) << c.inst.to_string();
  }
}

}  // namespace
}  // namespace sigmahg
