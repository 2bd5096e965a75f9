#pragma once

// Random exact instances and independent oracles shared by the unit and
// acceptance suites.

#include "eph/cycle.hpp"
#include "eph/moebius.hpp"

#include <array>
#include <cmath>
#include <random>

namespace eph::testing {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 12, long max_den = 6) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(long max_num = 12, long max_den = 6) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

  Point point() { return {rational(), rational()}; }
  HyperNum hypernum(Sigma s) { return {rational(), rational(), s}; }

  Cycle cycle() {
    for (;;) {
      Rational k = coin() ? rational() : Rational(0);
      Rational l = rational(), n = rational(), m = rational();
      if (k != 0 || l != 0 || n != 0 || m != 0) return {k, l, n, m};
    }
  }

  /// Exact det-1 real matrix: product of random shears and dilations.
  MoebiusMap sl2(Sigma s) {
    Rational a = 1, b = 0, c = 0, d = 1;
    for (int step = 0; step < 3; ++step) {
      Rational t = rational(6, 4);
      Rational lam = nonzero_rational(4, 3);
      // (a b; c d) * (1 t; 0 1) * (1 0; r 1) * diag(lam, 1/lam)
      Rational r = rational(6, 4);
      Rational b1 = a * t + b, d1 = c * t + d;
      Rational a2 = a + b1 * r, c2 = c + d1 * r;
      a = a2 * lam;
      c = c2 * lam;
      b = b1 / lam;
      d = d1 / lam;
    }
    return MoebiusMap::real(a, b, c, d, s);
  }

  /// Random map with hypercomplex entries and invertible determinant.
  MoebiusMap hyper_map(Sigma s) {
    for (;;) {
      Matrix2 m{hypernum(s), hypernum(s), hypernum(s), hypernum(s)};
      if (!is_zero_divisor(det(m))) return MoebiusMap(m);
    }
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Regular representation of u + iota v as the real matrix (u, sigma v; v, u).
/// Products of these matrices realise the algebra product independently of
/// HyperNum.
struct RegularRep {
  std::array<Rational, 4> e;

  static RegularRep of(const HyperNum& z) {
    return {{z.re(), value(z.sigma()) * z.im(), z.im(), z.re()}};
  }
  RegularRep operator*(const RegularRep& o) const {
    return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
             e[2] * o.e[1] + e[3] * o.e[3]}};
  }
  /// Back to (re, im): first column of the matrix.
  std::pair<Rational, Rational> coords() const { return {e[0], e[2]}; }
  Rational determinant() const { return e[0] * e[3] - e[1] * e[2]; }
};

/// Double numbers are R x R under (u, v) -> (u + v, u - v); arithmetic is
/// componentwise there.
struct NullCoords {
  Rational plus, minus;

  static NullCoords of(const Rational& u, const Rational& v) { return {u + v, u - v}; }
  NullCoords operator+(const NullCoords& o) const { return {plus + o.plus, minus + o.minus}; }
  NullCoords operator*(const NullCoords& o) const { return {plus * o.plus, minus * o.minus}; }
  NullCoords operator/(const NullCoords& o) const { return {plus / o.plus, minus / o.minus}; }
  Rational u() const { return (plus + minus) / 2; }
  Rational v() const { return (plus - minus) / 2; }
};

}  // namespace eph::testing
