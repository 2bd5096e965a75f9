#include "eph/cover.hpp"
#include "eph/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace eph;
using eph::testing::Gen;

namespace {

const Sigma H = Sigma::Hyperbolic;

SheetedPoint sp(const Rational& u, const Rational& v, Sheet s) { return {HyperNum(u, v, H), s}; }

std::vector<Rational> grid(const Rational& a, const Rational& b, long steps) {
  std::vector<Rational> out;
  for (long i = 0; i <= steps; ++i) out.push_back(a + (b - a) * i / steps);
  return out;
}

}  // namespace

TEST(Cover, OnlyHyperbolicPoints) {
  EXPECT_THROW(SheetedPoint(HyperNum(0, 1, Sigma::Elliptic), Sheet::Plus), ContextError);
}

TEST(Cover, ActSheetedExamples) {
  EXPECT_EQ(act_sheeted(MoebiusMap::real(1, 1, 0, 1, H), sp(0, 1, Sheet::Plus)), sp(1, 1, Sheet::Plus));
  MoebiusMap inv = MoebiusMap::real(0, -1, 1, 0, H);
  EXPECT_EQ(act_sheeted(inv, sp(0, 2, Sheet::Plus)), sp(0, Rational(-1, 2), Sheet::Minus));
  EXPECT_EQ(act_sheeted(inv, sp(2, 0, Sheet::Plus)), sp(Rational(-1, 2), 0, Sheet::Plus));
  EXPECT_THROW(act_sheeted(inv, sp(1, 1, Sheet::Plus)), OnLightConeAtInfinity);
  EXPECT_THROW(act_sheeted(MoebiusMap::real(0, 1, 1, 0, H), sp(0, 2, Sheet::Plus)), ContextError);
  EXPECT_THROW(act_sheeted(cayley(), sp(0, 2, Sheet::Plus)), ContextError);
}

TEST(Cover, Regions) {
  EXPECT_TRUE(in_upper(sp(0, 1, Sheet::Plus)));
  EXPECT_TRUE(in_upper(sp(0, -1, Sheet::Minus)));
  EXPECT_FALSE(in_upper(sp(0, -1, Sheet::Plus)));
  EXPECT_FALSE(in_upper(sp(3, 0, Sheet::Plus)));
  EXPECT_TRUE(in_disk(sp(0, 0, Sheet::Plus)));
  EXPECT_TRUE(in_disk(sp(0, 2, Sheet::Minus)));
  EXPECT_FALSE(in_disk(sp(0, 2, Sheet::Plus)));
  EXPECT_TRUE(on_unit_circle(sp(Rational(3, 4), Rational(5, 4), Sheet::Plus)));
  EXPECT_FALSE(in_disk(sp(Rational(3, 4), Rational(5, 4), Sheet::Plus)));
}

TEST(Cover, CayleyToDisk) {
  EXPECT_EQ(cayley_to_disk(sp(0, 1, Sheet::Plus)), sp(0, 0, Sheet::Plus));
  SheetedPoint o = cayley_to_disk(sp(0, 0, Sheet::Plus));
  EXPECT_EQ(o, sp(0, -1, Sheet::Plus));
  EXPECT_TRUE(on_unit_circle(o));
  // (0, -1) is on the singular set of the Cayley map.
  EXPECT_THROW(cayley_to_disk(sp(0, -1, Sheet::Minus)), OnLightConeAtInfinity);
  SheetedPoint lower = cayley_to_disk(sp(0, -2, Sheet::Minus));
  EXPECT_EQ(lower, sp(0, 3, Sheet::Minus));
  EXPECT_TRUE(in_disk(lower));
}

TEST(Cover, CocycleLaw) {
  Gen gen(61);
  int checked = 0;
  while (checked < 2000) {
    MoebiusMap g = gen.sl2(H), h = gen.sl2(H);
    SheetedPoint p(gen.hypernum(H), gen.coin() ? Sheet::Plus : Sheet::Minus);
    try {
      SheetedPoint step = act_sheeted(g, act_sheeted(h, p));
      ASSERT_EQ(step, act_sheeted(compose(g, h), p));
      ++checked;
    } catch (const OnLightConeAtInfinity&) {
    }
  }
}

TEST(Cover, DoubledUpperHalfPlaneIsInvariant) {
  Gen gen(62);
  int checked = 0, sheet_changes = 0;
  while (checked < 10000) {
    MoebiusMap g = gen.sl2(H);
    HyperNum z = gen.hypernum(H);
    if (z.im() == 0) continue;
    SheetedPoint p(z, z.im() > 0 ? Sheet::Plus : Sheet::Minus);
    ASSERT_TRUE(in_upper(p));
    if (is_zero_divisor(g.denominator(z))) continue;
    SheetedPoint q = act_sheeted(g, p);
    ASSERT_TRUE(in_upper(q));
    sheet_changes += q.sheet != p.sheet;
    ++checked;
  }
  // The plain upper half-plane is not invariant: sheets do change.
  EXPECT_GT(sheet_changes, 100);
}

TEST(Cover, ConjugatedMapsPreserveDisk) {
  Gen gen(63);
  MoebiusMap c = cayley();
  MoebiusMap c_inv = inverse(c);
  int checked = 0;
  while (checked < 1000) {
    MoebiusMap g = gen.sl2(H);
    SheetedPoint p(gen.hypernum(H), gen.coin() ? Sheet::Plus : Sheet::Minus);
    if (!in_disk(p)) continue;
    try {
      // c g c^-1 with the sheet cocycle of each factor.
      SheetedPoint q = cayley_to_disk(act_sheeted(g, [&] {
        Rational den = norm(c_inv.denominator(p.z));
        if (den == 0) throw OnLightConeAtInfinity("");
        return SheetedPoint(*apply(c_inv, p.z), p.sheet * sign(den));
      }()));
      ASSERT_TRUE(in_disk(q));
      ++checked;
    } catch (const OnLightConeAtInfinity&) {
    }
  }
}

TEST(Cover, ShearPathCrossesLightConeOnce) {
  auto family = [](const Rational& t) { return shear(t, H); };
  auto g = grid(0, 2, 8);
  PathTrace trace = continue_path(family, sp(0, 1, Sheet::Plus), g);
  EXPECT_EQ(trace.flips, 1);
  ASSERT_EQ(trace.samples.size(), 9u);
  EXPECT_TRUE(trace.samples[4].on_cone());
  EXPECT_EQ(trace.samples[4].t, 1);
  EXPECT_EQ(trace.samples.back().sheet, Sheet::Minus);
  for (std::size_t i = 0; i < trace.samples.size(); ++i)
    if (i != 4) EXPECT_FALSE(trace.samples[i].on_cone());
  // A grid that skips t = 1 still records the flip.
  EXPECT_EQ(continue_path(family, sp(0, 1, Sheet::Plus), grid(0, 2, 7)).flips, 1);
}

TEST(Cover, TimeReversalPathStaysOnSheet) {
  auto family = [](const Rational& t) { return time_reversal(t); };
  PathTrace trace = continue_path(family, sp(0, 1, Sheet::Plus), grid(0, 5, 20));
  EXPECT_EQ(trace.flips, 0);
  for (const PathSample& s : trace.samples) {
    ASSERT_TRUE(s.z);
    EXPECT_EQ(*s.z, HyperNum(0, (1 - s.t) / (1 + s.t), H));
    EXPECT_EQ(s.sheet, Sheet::Plus);
  }
}

TEST(Cover, PathPreconditions) {
  auto g = grid(0, 1, 2);
  EXPECT_EQ(continue_path([](const Rational&) { return MoebiusMap::identity(H); }, sp(0, 1, Sheet::Plus), g).flips, 0);
  EXPECT_THROW(continue_path([](const Rational& t) { return shear(t + 1, H); }, sp(0, 1, Sheet::Plus), g),
               GeometryError);
  EXPECT_THROW(continue_path([](const Rational& t) { return shear(t, Sigma::Elliptic); }, sp(0, 1, Sheet::Plus), g),
               ContextError);
}
