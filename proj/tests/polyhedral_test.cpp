#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nashlab/polyhedral.hpp"
#include "oracles.hpp"

using namespace nashlab;

namespace {

using Vs = std::vector<LatticeVector>;

Vs sorted(Vs v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Same point set: each side's generators satisfy the other's inequalities.
bool same_cone(const Cone& a, const Cone& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

Vs random_rays(std::size_t d, std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Vs out;
  while (out.size() < n) {
    LatticeVector v(d);
    for (auto& x : v) x = dist(rng);
    if (!is_zero(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Dualize, Examples) {
  Cone orthant(2, {make_vector({1, 0}), make_vector({0, 1})});
  EXPECT_EQ(sorted(extreme_rays(dualize(orthant))), (Vs{make_vector({0, 1}), make_vector({1, 0})}));

  Cone a1(2, {make_vector({1, 0}), make_vector({1, 2})});
  EXPECT_EQ(sorted(extreme_rays(dualize(a1))), (Vs{make_vector({0, 1}), make_vector({2, -1})}));

  Cone full(2, {make_vector({1, 0}), make_vector({-1, 0}), make_vector({0, 1}),
                make_vector({0, -1})});
  Cone dual = dualize(full);
  EXPECT_EQ(dual.dimension(), 0u);
  EXPECT_TRUE(dual.contains(make_vector({0, 0})));
  EXPECT_FALSE(dual.contains(make_vector({1, 0})));
}

TEST(Dualize, DoubleDualIsIdentity) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + rng() % 4;
    Cone c(d, random_rays(d, 1 + rng() % 6, rng, -3, 3));
    Cone cc = dualize(dualize(c));
    ASSERT_TRUE(same_cone(c, cc)) << "trial " << trial;
    // Facets are valid and every generator is inside.
    for (const auto& g : c.generators()) {
      for (const auto& f : c.facets()) ASSERT_GE(dot(f, g), 0);
      for (const auto& e : c.equations()) ASSERT_EQ(dot(e, g), 0);
    }
  }
}

TEST(Cone, ContainmentAgreesWithFourierMotzkin) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    Vs gens = random_rays(d, 1 + rng() % 5, rng, -3, 3);
    Cone c(d, gens);
    for (int probe = 0; probe < 10; ++probe) {
      LatticeVector v(d);
      for (auto& x : v) x = dist(rng);
      ASSERT_EQ(c.contains(v), oracle::in_cone(gens, v)) << to_string(v);
    }
  }
}

TEST(Cone, RankGuard) {
  Vs gens;
  for (std::size_t i = 0; i < kMaxConeRank + 1; ++i) {
    LatticeVector v(kMaxConeRank + 1);
    v[i] = 1;
    gens.push_back(v);
  }
  EXPECT_THROW(Cone(kMaxConeRank + 1, gens), ResourceError);
}

TEST(Pointedness, Examples) {
  EXPECT_TRUE(pointedness(Cone(2, {make_vector({1, 0}), make_vector({0, 1})})).pointed);

  auto line = pointedness(Cone(1, {make_vector({1}), make_vector({-1})}));
  EXPECT_FALSE(line.pointed);
  EXPECT_EQ(line.lineality_basis, (Vs{make_vector({1})}));

  auto half = pointedness(
      Cone(2, {make_vector({1, 0}), make_vector({-1, 0}), make_vector({0, 1})}));
  EXPECT_FALSE(half.pointed);
  EXPECT_EQ(half.lineality_basis, (Vs{make_vector({1, 0})}));
}

TEST(InteriorFunctional, PositiveOffLineality) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    Cone c(d, random_rays(d, 1 + rng() % 5, rng, -3, 3));
    const auto l = interior_functional(c);
    const auto lin = pointedness(c).lineality_basis;
    for (const auto& v : lin) ASSERT_EQ(dot(l, v), 0);
    for (const auto& g : c.generators()) {
      if (oracle::in_cone(c.generators(), -g)) ASSERT_EQ(dot(l, g), 0);
      else ASSERT_GT(dot(l, g), 0);
    }
  }
}

TEST(HilbertBasis, Examples) {
  EXPECT_EQ(hilbert_basis(Cone(2, {make_vector({1, 0}), make_vector({0, 1})})).elements,
            (Vs{make_vector({0, 1}), make_vector({1, 0})}));
  EXPECT_EQ(hilbert_basis(Cone(2, {make_vector({1, 0}), make_vector({1, 2})})).elements,
            (Vs{make_vector({1, 0}), make_vector({1, 1}), make_vector({1, 2})}));
  for (long k = 1; k <= 5; ++k) {
    auto hb = hilbert_basis(Cone(2, {make_vector({1, 0}), make_vector({1, k})})).elements;
    ASSERT_EQ(hb.size(), static_cast<std::size_t>(k + 1));
    for (long j = 0; j <= k; ++j) EXPECT_EQ(hb[j], make_vector({1, j}));
    EXPECT_EQ(hb, oracle::brute_hilbert_basis({make_vector({1, 0}), make_vector({1, k})}));
  }
}

TEST(HilbertBasis, Errors) {
  EXPECT_THROW(hilbert_basis(Cone(1, {make_vector({1}), make_vector({-1})})), NotPointedError);
  EXPECT_THROW(saturate(Vs{make_vector({0, 0})}), DegenerateInputError);
  EXPECT_THROW(saturate(Vs{}), DegenerateInputError);
}

TEST(HilbertBasis, AgreesWithBoxScan) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + rng() % 2;
    Vs rays = random_rays(d, d + rng() % 2, rng, 0, d == 2 ? 5 : 3);
    if (rank(rays, d) != d) continue;
    auto got = hilbert_basis(Cone(d, rays)).elements;
    ASSERT_EQ(got, oracle::brute_hilbert_basis(rays)) << "trial " << trial;
  }
}

TEST(HilbertBasis, ReeveCones) {
  for (long q = 1; q <= 4; ++q) {
    Vs rays{make_vector({0, 0, 0, 1}), make_vector({1, 0, 0, 1}), make_vector({0, 1, 0, 1}),
            make_vector({1, 1, q, 1})};
    auto hb = saturate(rays).elements;
    // The Reeve simplex has no lattice points besides its vertices, so the
    // Hilbert basis is the four rays plus interior points at heights >= 2.
    for (const auto& r : rays) EXPECT_TRUE(std::binary_search(hb.begin(), hb.end(), r));
    EXPECT_EQ(hb.size() == 4, q == 1);
  }
}

TEST(Saturate, ExamplesAndIdempotence) {
  EXPECT_EQ(saturate(Vs{make_vector({2}), make_vector({3})}).elements, (Vs{make_vector({1})}));
  EXPECT_EQ(saturate(Vs{make_vector({1, 0}), make_vector({1, 2})}).elements,
            (Vs{make_vector({1, 0}), make_vector({1, 1}), make_vector({1, 2})}));
  Vs smooth{make_vector({0, 1}), make_vector({1, 0})};
  EXPECT_EQ(saturate(smooth).elements, smooth);

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng() % 2;
    Vs rays = random_rays(d, d + 1, rng, 0, 3);
    auto once = saturate(rays).elements;
    EXPECT_EQ(saturate(once).elements, once);
  }
}

TEST(Saturate, LowerDimensionalInput) {
  // A ray of the plane: saturation is along the primitive vector.
  EXPECT_EQ(saturate(Vs{make_vector({2, 4})}).elements, (Vs{make_vector({1, 2})}));
}

TEST(HilbertBasis, EveryElementIsIrreducibleAndNeeded) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 15; ++trial) {
    Vs rays = random_rays(2, 2, rng, 0, 6);
    if (rank(rays, 2) != 2) continue;
    auto hb = hilbert_basis(Cone(2, rays)).elements;
    // Every lattice point of the cone in a box is a combination of the basis.
    auto combos = oracle::combinations(hb, 12);
    Cone c(2, rays);
    for (long x = 0; x <= 6; ++x)
      for (long y = 0; y <= 6; ++y) {
        auto v = make_vector({x, y});
        if (!c.contains(v)) continue;
        ASSERT_TRUE(std::binary_search(combos.begin(), combos.end(), v))
            << to_string(v) << " rays " << to_string(rays[0]) << to_string(rays[1]) << " hb "
            << hb.size();
      }
    // Removing any element loses that element.
    for (std::size_t i = 0; i < hb.size(); ++i) {
      Vs rest = hb;
      rest.erase(rest.begin() + i);
      if (rest.empty()) continue;
      EXPECT_FALSE(oracle::brute_member(rest, hb[i], 8));
    }
  }
}
