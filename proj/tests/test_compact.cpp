#include "eph/compact.hpp"
#include "eph/errors.hpp"
#include "eph/products.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace eph;
using eph::testing::Gen;

namespace {

constexpr Sigma kAll[] = {Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic};
const Sigma E = Sigma::Elliptic;
const Sigma P = Sigma::Parabolic;
const Sigma H = Sigma::Hyperbolic;

}  // namespace

TEST(Compact, EmbedAndUnembed) {
  EXPECT_EQ(embed({1, 2}, E).quadruple(), Cycle(1, 1, 2, 5));
  EXPECT_FALSE(unembed(Cycle(0, 0, 0, 1), E).has_value());
  EXPECT_THROW(unembed(Cycle(1, 0, 0, -1), E), NotAPoint);
  EXPECT_THROW(CPoint(Cycle(1, 0, 0, -1), H), NotAPoint);
  Gen gen(51);
  for (Sigma s : kAll)
    for (int i = 0; i < 300; ++i) {
      Point p = gen.point();
      ASSERT_EQ(unembed(embed(p, s)), p);
      ASSERT_EQ(unembed(embed(p, s).quadruple().scaled(gen.nonzero_rational()), s), p);
    }
}

TEST(Compact, ActExamples) {
  for (Sigma s : kAll) {
    CPoint origin = embed({0, 0}, s);
    EXPECT_TRUE(projectively_equal(act(MoebiusMap::identity(s), origin), origin));
    EXPECT_TRUE(projectively_equal(act(MoebiusMap::real(1, 1, 0, 1, s), origin), embed({1, 0}, s)));
    EXPECT_TRUE(projectively_equal(act(MoebiusMap::real(0, -1, 1, 0, s), origin), z_infinity(s)));
  }
}

TEST(Compact, ActIsTotalAndCompatible) {
  Gen gen(52);
  for (Sigma s : kAll) {
    int singular_hits = 0;
    for (int i = 0; i < 2000; ++i) {
      MoebiusMap g = gen.sl2(s);
      Point p = gen.point();
      // Every fourth sample is forced onto the singular set of g.
      if (i % 4 == 0 && g.c().re() != 0) {
        Rational u0 = -g.d().re() / g.c().re();
        if (s == E) p = {u0, 0};
        else if (s == P) p.u = u0;
        else p = {u0 + p.v, p.v};
      }
      CPoint image = act(g, embed(p, s));
      ASSERT_TRUE(is_zero_radius(image.quadruple(), CycleContext::matching(s)));
      bool singular = singular_set(g).contains(p.u, p.v);
      singular_hits += singular;
      ASSERT_EQ(image.is_ideal(), singular);
      if (!singular) ASSERT_EQ(unembed(image), Point::of(*apply(g, p.as_number(s))));
    }
    EXPECT_GT(singular_hits, 100);
  }
}

TEST(Compact, HyperbolicInfinityKeepsDirections) {
  MoebiusMap g = MoebiusMap::real(0, -1, 1, 0, H);
  CPoint a = act(g, embed({1, 1}, H));
  CPoint b = act(g, embed({2, 2}, H));
  CPoint c = act(g, embed({1, -1}, H));
  EXPECT_TRUE(a.is_ideal());
  EXPECT_TRUE(b.is_ideal());
  EXPECT_TRUE(c.is_ideal());
  EXPECT_FALSE(projectively_equal(a, b));
  EXPECT_FALSE(projectively_equal(a, c));
  EXPECT_FALSE(projectively_equal(a, z_infinity(H)));
  // Applying g again brings them back.
  EXPECT_TRUE(projectively_equal(act(g, a), embed({1, 1}, H)));
}

TEST(Compact, InvertUnit) {
  EXPECT_TRUE(projectively_equal(invert_unit(Cycle(1, 0, 0, 0)), Cycle(0, 0, 0, 1)));
  EXPECT_EQ(invert_unit(Cycle(1, 0, 0, -1)), Cycle(-1, 0, 0, 1));
  EXPECT_EQ(invert_unit(Cycle(0, 1, 0, 2)), Cycle(2, 1, 0, 0));
  EXPECT_EQ(invert_unit(Cycle(1, 2, 3, 4)), Cycle(4, 2, 3, 1));
  Gen gen(53);
  for (int i = 0; i < 500; ++i) {
    Cycle c = gen.cycle();
    ASSERT_TRUE(projectively_equal(invert_unit(invert_unit(c)), c));
  }
}

TEST(Compact, InvertUnitMatchesClassicalInversion) {
  // z -> z / |z|^2 maps the line u = 1 onto the circle (2, 1, 0, 0).
  Cycle image = invert_unit(Cycle(0, 1, 0, 2));
  EXPECT_EQ(radius_sq(image, CycleContext(E, 1)), Rational(1, 4));
  EXPECT_EQ(centre(image, CycleContext(E, 1)), (Point{Rational(1, 2), 0}));
  for (int j = -20; j <= 20; ++j) {
    Rational v(j, 3);
    Rational r2 = 1 + v * v;
    ASSERT_TRUE(on_cycle(image, {1 / r2, v / r2}, E));
  }
  // In every geometry the inversion is z -> z / norm(z) applied pointwise.
  Gen gen(54);
  for (Sigma s : kAll)
    for (int i = 0; i < 500; ++i) {
      Cycle c = gen.cycle();
      Point p = gen.point();
      Rational n = p.u * p.u - value(s) * p.v * p.v;
      if (n == 0) continue;
      ASSERT_EQ(on_cycle(c, p, s), on_cycle(invert_unit(c), {p.u / n, p.v / n}, s));
    }
}

TEST(Compact, EquivalenceExamples) {
  EquivalenceChecks a = equivalence_checks({1, 1}, H);
  EXPECT_TRUE(a.on_origin_cone && *a.orthogonal_to_origin && a.inversion_singular && a.image_orthogonal_to_infinity);
  EquivalenceChecks b = equivalence_checks({2, 1}, H);
  EXPECT_FALSE(b.on_origin_cone || *b.orthogonal_to_origin || b.inversion_singular || b.image_orthogonal_to_infinity);
  for (Sigma s : kAll) {
    EquivalenceChecks o = equivalence_checks({0, 0}, s);
    EXPECT_TRUE(o.on_origin_cone && o.inversion_singular && o.image_orthogonal_to_infinity);
    EXPECT_EQ(o.orthogonal_to_origin.has_value(), s != P);
    EXPECT_TRUE(o.agree());
  }
}

TEST(Compact, EquivalencesAgree) {
  Gen gen(55);
  for (Sigma s : kAll) {
    int positives = 0;
    for (int i = 0; i < 2000; ++i) {
      Point p = gen.point();
      if (i % 3 == 0) p.u = s == H ? (gen.coin() ? p.v : Rational(-p.v)) : Rational(0);
      if (i % 3 == 0 && s == E) p.v = 0;
      EquivalenceChecks c = equivalence_checks(p, s);
      ASSERT_TRUE(c.agree());
      positives += c.on_origin_cone;
    }
    EXPECT_GT(positives, 500);
  }
}

TEST(Compact, LiftExamples) {
  EXPECT_EQ(lift({0, 0}, E), (SurfacePoint{0, 0, -1}));
  EXPECT_EQ(project(lift({3, 4}, E), E), (Point{3, 4}));
  EXPECT_THROW(lift({0, 1}, H), AtPole);
  EXPECT_THROW(project({0, 0, 1}, E), AtPole);
  EXPECT_THROW(project({1, 1, 1}, E), GeometryError);
}

TEST(Compact, LiftRoundTrip) {
  Gen gen(56);
  for (Sigma s : kAll)
    for (int i = 0; i < 1000; ++i) {
      Point p = gen.point();
      if (s == H && p.u * p.u - p.v * p.v == -1) continue;
      SurfacePoint sp = lift(p, s);
      ASSERT_TRUE(on_surface(sp, s));
      ASSERT_EQ(project(sp, s), p);
      ASSERT_EQ(lift(project(sp, s), s), sp);
    }
}
