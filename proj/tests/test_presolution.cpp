#include <gtest/gtest.h>

#include "cqs/presolution.hpp"
#include "oracles.hpp"

using namespace cqs;

namespace {

std::vector<NVec> to_nvecs(const std::vector<oracle::P>& ps) {
  std::vector<NVec> out;
  for (const auto& [x, y] : ps) out.push_back({x, y});
  return out;
}

std::vector<std::pair<Int, Int>> roof_data(const Fan& fan) {
  std::vector<std::pair<Int, Int>> out;
  for (const FanCone& c : fan.cones) out.emplace_back(c.roof.h, c.roof.l);
  return out;
}

}  // namespace

TEST(MinimalResolution, WorkedExampleAndA1) {
  NormalForm nf = normal_form(18, 11);
  Fan fan = minimal_resolution_fan(nf);
  EXPECT_EQ(fan.rays.size(), 5u);
  EXPECT_EQ(fan.cones.size(), 4u);
  for (const FanCone& c : fan.cones) {
    EXPECT_EQ(c.cls.tag, ClassTag::Smooth);
    EXPECT_EQ(det(c.lo, c.hi), 1);
  }
  EXPECT_EQ(minimal_resolution_fan(normal_form(2, 1)).rays,
            (std::vector<NVec>{{1, 0}, {0, 1}, {-1, 2}}));
}

TEST(MinimalResolution, RaysThroughHullBoundaryLatticePoints) {
  for (long long n = 2; n <= 60; ++n)
    for (long long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      oracle::HullBoundary hb = oracle::compact_hull_boundary(n, q);
      ASSERT_EQ(minimal_resolution_fan(normal_form(n, q)).rays, to_nvecs(hb.lattice_points))
          << n << "," << q;
    }
}

TEST(BuildSigmaK, WorkedExampleFans) {
  NormalForm nf = normal_form(18, 11);

  Fan s1 = build_sigma_k(nf, make_kchain(ints({3, 1, 2, 2})));
  EXPECT_EQ(s1.rays, (std::vector<NVec>{{1, 0}, {-11, 18}}));
  ASSERT_EQ(s1.cones.size(), 1u);
  EXPECT_EQ(s1.cones[0].roof.h, 3);
  EXPECT_EQ(s1.cones[0].roof.l, 6);
  EXPECT_EQ(s1.cones[0].roof.w, (MVec{3, 2}));
  EXPECT_EQ(s1.cones[0].cls.tag, ClassTag::T);

  Fan s2 = build_sigma_k(nf, make_kchain(ints({1, 3, 1, 2})));
  ASSERT_EQ(s2.rays.size(), 3u);
  // (0,1) in the input coordinates of <(-2,3), (4,3)>.
  EXPECT_EQ(normalize_cone({{-2, 3}, {4, 3}}).transform({0, 1}), s2.rays[1]);
  EXPECT_EQ(roof_data(s2), (std::vector<std::pair<Int, Int>>{{1, 2}, {2, 2}}));

  Fan rdp = build_sigma_k(nf, make_kchain(ints({1, 2, 2, 1})));
  NormalForm input = normalize_cone({{-2, 3}, {4, 3}});
  std::vector<NVec> in_input;
  for (const NVec& v : rdp.rays) in_input.push_back(input.to_input(v));
  EXPECT_EQ(in_input, (std::vector<NVec>{{-2, 3}, {0, 1}, {1, 1}, {4, 3}}));
  std::vector<Int> ratios;
  for (const FanCone& c : rdp.cones) ratios.push_back(c.roof.l / c.roof.h);
  std::sort(ratios.begin(), ratios.end());
  EXPECT_EQ(ratios, ints({1, 1, 2}));
}

TEST(BuildSigmaK, RejectsInadmissibleChain) {
  NormalForm nf = normal_form(18, 11);
  EXPECT_THROW(build_sigma_k(nf, make_kchain(ints({2, 3, 1, 2}))), DomainError);
  EXPECT_THROW(build_sigma_k(nf, make_kchain(ints({2, 2, 1, 3}))), DomainError);  // k_5 > a_5
  EXPECT_THROW(build_sigma_k(nf, make_kchain(ints({1, 1}))), DomainError);
}

TEST(BuildSigmaK, RoofsMatchChainPredictionUpTo60) {
  for (long long n = 3; n <= 60; ++n)
    for (long long q = 1; q < n - 1; ++q) {
      if (std::gcd(n, q) != 1) continue;
      NormalForm nf = normal_form(n, q);
      std::vector<MVec> w = w_generators(nf);
      for (const KChain& k : enumerate_KY(nf.a_chain)) {
        Fan fan = build_sigma_k(nf, k);
        std::size_t positive = 0;
        for (std::size_t j = 0; j < k.size(); ++j) positive += nf.a_chain[j] > k.k[j];
        ASSERT_EQ(fan.cones.size(), positive);
        for (std::size_t j = 0; j < fan.cones.size(); ++j) {
          const FanCone& c = fan.cones[j];
          const std::size_t i = static_cast<std::size_t>(c.chain_index);
          ConeRoof intrinsic = cone_roof(c.lo, c.hi);
          ASSERT_EQ(intrinsic.w, w[i - 1]);
          ASSERT_EQ(intrinsic.cls.h, k.q(i));
          ASSERT_EQ(intrinsic.cls.l, (nf.a_chain[i - 2] - k.k[i - 2]) * k.q(i));
          ASSERT_EQ(intrinsic.cls.l % intrinsic.cls.h, 0);
          ASSERT_TRUE(is_primitive(c.lo) && is_primitive(c.hi));
          // Continuity: on the shared ray the two roof lines meet.
          if (j + 1 < fan.cones.size()) {
            const FanCone& next = fan.cones[j + 1];
            ASSERT_EQ(pair(c.hi, w[i - 1]), k.q(i));
            ASSERT_EQ(pair(next.lo, w[next.chain_index - 1]), k.q(next.chain_index));
          }
        }
      }
    }
}

TEST(BuildSigmaK, IdentityFanIffTSingularity) {
  for (long long n = 3; n <= 60; ++n)
    for (long long q = 1; q < n - 1; ++q) {
      if (std::gcd(n, q) != 1) continue;
      NormalForm nf = normal_form(n, q);
      bool identity = false;
      for (const KChain& k : enumerate_KY(nf.a_chain))
        identity = identity || build_sigma_k(nf, k).rays.size() == 2;
      ASSERT_EQ(identity, oracle::is_t_singularity(n, q)) << n << "," << q;
    }
}

TEST(RdpFan, WorkedExample) {
  NormalForm nf = normal_form(18, 11);
  Fan fan = rdp_fan(nf);
  EXPECT_EQ(fan.rays, (std::vector<NVec>{{1, 0}, {-1, 2}, {-3, 5}, {-11, 18}}));
  for (const FanCone& c : fan.cones) {
    EXPECT_EQ(c.roof.h, 1);
    EXPECT_TRUE(c.cls.tag == ClassTag::Smooth || c.cls.tag == ClassTag::DuValA);
  }
  EXPECT_THROW(rdp_fan(normal_form(5, 4)), HypersurfaceCase);
}

TEST(RdpFan, RaysThroughHullVertices) {
  for (long long n = 3; n <= 60; ++n)
    for (long long q = 1; q < n - 1; ++q) {
      if (std::gcd(n, q) != 1) continue;
      oracle::HullBoundary hb = oracle::compact_hull_boundary(n, q);
      ASSERT_EQ(rdp_fan(normal_form(n, q)).rays, to_nvecs(hb.vertices)) << n << "," << q;
    }
}

TEST(ValidatePresolution, Examples) {
  NormalForm nf = normal_form(18, 11);
  EXPECT_TRUE(validate_presolution(rdp_fan(nf)).ok);

  ValidationReport minimal = validate_presolution(minimal_resolution_fan(nf));
  EXPECT_FALSE(minimal.ok);
  EXPECT_EQ(minimal.failed, ValidationCheck::Convexity);
  // (1,0), (0,1), (-1,2) are collinear since b_1 = 2.
  EXPECT_EQ(minimal.index, 1u);

  ValidationReport y52 = validate_presolution(identity_fan(normal_form(5, 2)));
  EXPECT_FALSE(y52.ok);
  EXPECT_EQ(y52.failed, ValidationCheck::TTest);
}

TEST(ValidatePresolution, DetectsBrokenRoofs) {
  NormalForm nf = normal_form(18, 11);
  Fan fan = rdp_fan(nf);
  fan.cones[0].roof.hi = RatPoint(Rat(-2), Rat(4));
  ValidationReport rep = validate_presolution(fan);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.failed, ValidationCheck::RoofContinuity);

  Fan concave = make_fan({{1, 0}, {-1, 3}, {-11, 18}});
  EXPECT_FALSE(validate_presolution(concave).ok);
}

TEST(BruteForce, WorkedExampleHasThreeFans) {
  NormalForm nf = normal_form(18, 11);
  std::vector<Fan> fans = brute_force_presolutions(nf);
  ASSERT_EQ(fans.size(), 3u);
  EXPECT_NE(std::find(fans.begin(), fans.end(), rdp_fan(nf)), fans.end());
  EXPECT_THROW(brute_force_presolutions(nf, 2), ResourceError);
}

TEST(BruteForce, EqualsChainFansUpTo20) {
  for (long long n = 3; n <= 20; ++n)
    for (long long q = 1; q < n - 1; ++q) {
      if (std::gcd(n, q) != 1) continue;
      NormalForm nf = normal_form(n, q);
      std::vector<Fan> chain_fans;
      for (const KChain& k : enumerate_KY(nf.a_chain)) chain_fans.push_back(build_sigma_k(nf, k));
      std::sort(chain_fans.begin(), chain_fans.end(),
                [](const Fan& a, const Fan& b) { return a.rays < b.rays; });
      ASSERT_EQ(brute_force_presolutions(nf), chain_fans) << n << "," << q;
    }
}
