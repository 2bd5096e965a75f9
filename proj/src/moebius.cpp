#include "eph/moebius.hpp"

#include "eph/errors.hpp"

namespace eph {

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2 operator*(const Rational& r, const Matrix2& x) { return {r * x.a, r * x.b, r * x.c, r * x.d}; }

Matrix2 operator*(const HyperNum& z, const Matrix2& x) { return {z * x.a, z * x.b, z * x.c, z * x.d}; }

HyperNum det(const Matrix2& x) { return x.a * x.d - x.b * x.c; }

HyperNum trace(const Matrix2& x) { return x.a + x.d; }

Matrix2 adjugate(const Matrix2& x) { return {x.d, -x.b, -x.c, x.a}; }

Matrix2 conj(const Matrix2& x) { return {conj(x.a), conj(x.b), conj(x.c), conj(x.d)}; }

Matrix2 with_sigma(const Matrix2& x, Sigma sigma) {
  return {x.a.with_sigma(sigma), x.b.with_sigma(sigma), x.c.with_sigma(sigma), x.d.with_sigma(sigma)};
}

MoebiusMap::MoebiusMap(Matrix2 m) : m_(std::move(m)) {
  Sigma s = m_.a.sigma();
  if (m_.b.sigma() != s || m_.c.sigma() != s || m_.d.sigma() != s)
    throw ContextError("matrix entries from different algebras");
  if (is_zero_divisor(eph::det(m_)))
    throw NonInvertible("determinant " + to_string(eph::det(m_)) + " is a zero divisor");
}

MoebiusMap MoebiusMap::real(const Rational& a, const Rational& b, const Rational& c, const Rational& d, Sigma sigma) {
  return MoebiusMap(
      Matrix2{HyperNum::real(a, sigma), HyperNum::real(b, sigma), HyperNum::real(c, sigma), HyperNum::real(d, sigma)});
}

MoebiusMap MoebiusMap::identity(Sigma sigma) { return real(1, 0, 0, 1, sigma); }

HyperNum MoebiusMap::denominator(const HyperNum& z) const { return m_.c * z + m_.d; }

std::optional<HyperNum> apply(const MoebiusMap& g, const HyperNum& z) {
  HyperNum den = g.denominator(z);
  if (is_zero_divisor(den)) return std::nullopt;
  return (g.a() * z + g.b()) * invert(den);
}

MoebiusMap compose(const MoebiusMap& g, const MoebiusMap& h) { return MoebiusMap(g.matrix() * h.matrix()); }

MoebiusMap inverse(const MoebiusMap& g) { return MoebiusMap(invert(g.det()) * adjugate(g.matrix())); }

bool projectively_equal(const MoebiusMap& g, const MoebiusMap& h) {
  if (g.sigma() != h.sigma()) return false;
  const HyperNum* gs[] = {&g.a(), &g.b(), &g.c(), &g.d()};
  const HyperNum* hs[] = {&h.a(), &h.b(), &h.c(), &h.d()};
  // Pick the scale from the first nonzero coordinate of g.
  std::optional<Rational> lambda;
  for (int i = 0; i < 4 && !lambda; ++i) {
    if (gs[i]->re() != 0) lambda = hs[i]->re() / gs[i]->re();
    else if (gs[i]->im() != 0) lambda = hs[i]->im() / gs[i]->im();
  }
  if (!lambda || *lambda == 0) return false;
  for (int i = 0; i < 4; ++i)
    if (*lambda * *gs[i] != *hs[i]) return false;
  return true;
}

MoebiusMap time_reversal(const Rational& t) {
  if (t < 0) throw std::invalid_argument("time_reversal parameter must be non-negative");
  const Sigma h = Sigma::Hyperbolic;
  return MoebiusMap(Matrix2{HyperNum::real(1, h), HyperNum(0, -t, h), HyperNum(0, t, h), HyperNum::real(1, h)});
}

MoebiusMap cayley() {
  const Sigma h = Sigma::Hyperbolic;
  return MoebiusMap(Matrix2{HyperNum::real(1, h), HyperNum(0, -1, h), HyperNum(0, 1, h), HyperNum::real(1, h)});
}

MoebiusMap shear(const Rational& t, Sigma sigma) { return MoebiusMap::real(1, 0, t, 1, sigma); }

SingularSet singular_set(const MoebiusMap& g) {
  const HyperNum& c = g.c();
  const HyperNum& d = g.d();
  switch (g.sigma()) {
    case Sigma::Elliptic: {
      if (c.is_zero()) return {SingularSet::Empty{}};
      HyperNum z0 = -(d / c);
      return {SingularSet::Point{z0.re(), z0.im()}};
    }
    case Sigma::Parabolic: {
      // norm(cz + d) = (c.re u + d.re)^2
      if (c.re() == 0) return {SingularSet::Empty{}};
      return {SingularSet::VerticalLine{-d.re() / c.re()}};
    }
    case Sigma::Hyperbolic: {
      // norm(p + iota q) = (p + q)(p - q) with
      // p + q = (c1 + c2)(u + v) + d1 + d2 and p - q = (c1 - c2)(u - v) + d1 - d2.
      SingularSet::NullLines lines;
      Rational cp = c.re() + c.im();
      Rational cm = c.re() - c.im();
      if (cp != 0) lines.plus = -(d.re() + d.im()) / cp;
      if (cm != 0) lines.minus = -(d.re() - d.im()) / cm;
      if (!lines.plus && !lines.minus) return {SingularSet::Empty{}};
      return {lines};
    }
  }
  return {SingularSet::Empty{}};
}

bool SingularSet::contains(const Rational& u, const Rational& v) const {
  struct Visitor {
    const Rational& u;
    const Rational& v;
    bool operator()(const Empty&) const { return false; }
    bool operator()(const Point& p) const { return p.u == u && p.v == v; }
    bool operator()(const VerticalLine& l) const { return l.u0 == u; }
    bool operator()(const NullLines& l) const {
      return (l.plus && *l.plus == u + v) || (l.minus && *l.minus == u - v);
    }
  };
  return std::visit(Visitor{u, v}, shape);
}

std::string SingularSet::describe() const {
  struct Visitor {
    std::string operator()(const Empty&) const { return "empty"; }
    std::string operator()(const Point& p) const { return "point (" + to_string(p.u) + ", " + to_string(p.v) + ")"; }
    std::string operator()(const VerticalLine& l) const { return "line u = " + to_string(l.u0); }
    std::string operator()(const NullLines& l) const {
      std::string out;
      if (l.plus) out += "line u + v = " + to_string(*l.plus);
      if (l.minus) out += std::string(out.empty() ? "" : "; ") + "line u - v = " + to_string(*l.minus);
      return out;
    }
  };
  return std::visit(Visitor{}, shape);
}

}  // namespace eph
