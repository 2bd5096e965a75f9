#pragma once

#include "eph/algebra.hpp"

#include <optional>
#include <string>
#include <variant>

namespace eph {

/// Plain 2x2 matrix over one hypercomplex algebra. Row-major (a b; c d).
struct Matrix2 {
  HyperNum a, b, c, d;

  Sigma sigma() const { return a.sigma(); }
  bool is_real() const { return a.is_real() && b.is_real() && c.is_real() && d.is_real(); }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);
Matrix2 operator*(const Rational& r, const Matrix2& x);
Matrix2 operator*(const HyperNum& z, const Matrix2& x);
HyperNum det(const Matrix2& x);
HyperNum trace(const Matrix2& x);
/// Adjugate (d -b; -c a); x * adjugate(x) = det(x) * I.
Matrix2 adjugate(const Matrix2& x);
/// Entrywise conjugation iota -> -iota.
Matrix2 conj(const Matrix2& x);
/// Reinterprets every entry in another algebra.
Matrix2 with_sigma(const Matrix2& x, Sigma sigma);

/// Linear-fractional map z -> (az + b)/(cz + d) over one of the three
/// algebras. The determinant must not be a zero divisor. Maps are kept
/// unnormalised; equality of maps is projective (see projectively_equal).
class MoebiusMap {
public:
  /// Throws NonInvertible when det is a zero divisor and ContextError when
  /// the entries come from different algebras.
  explicit MoebiusMap(Matrix2 m);

  /// Real-entry map in the given algebra.
  static MoebiusMap real(const Rational& a, const Rational& b, const Rational& c, const Rational& d, Sigma sigma);
  static MoebiusMap identity(Sigma sigma);

  const Matrix2& matrix() const noexcept { return m_; }
  const HyperNum& a() const noexcept { return m_.a; }
  const HyperNum& b() const noexcept { return m_.b; }
  const HyperNum& c() const noexcept { return m_.c; }
  const HyperNum& d() const noexcept { return m_.d; }
  Sigma sigma() const noexcept { return m_.sigma(); }
  HyperNum det() const { return eph::det(m_); }
  bool is_real() const { return m_.is_real(); }

  /// c*z + d.
  HyperNum denominator(const HyperNum& z) const;

  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

private:
  Matrix2 m_;
};

/// g . z, or std::nullopt when c z + d is a zero divisor: the image then
/// lies on the cycle at infinity and only the compactified action
/// (compact.hpp) can say where.
std::optional<HyperNum> apply(const MoebiusMap& g, const HyperNum& z);

/// Matrix product; apply(compose(g, h), z) == apply(g, apply(h, z)).
MoebiusMap compose(const MoebiusMap& g, const MoebiusMap& h);
MoebiusMap inverse(const MoebiusMap& g);

/// True when g = lambda h for a real nonzero lambda.
bool projectively_equal(const MoebiusMap& g, const MoebiusMap& h);

/// (1, -t iota; t iota, 1) over double numbers. The continuous family
/// taking the future part of the light cone to the past one.
MoebiusMap time_reversal(const Rational& t);

/// (1, -iota; iota, 1) over double numbers.
MoebiusMap cayley();

/// (1, 0; t, 1), real, in the given algebra.
MoebiusMap shear(const Rational& t, Sigma sigma);

/// Zero set of norm(c z + d) in the point plane.
struct SingularSet {
  struct Empty {
    friend bool operator==(const Empty&, const Empty&) = default;
  };
  /// Elliptic case: the single point -d/c.
  struct Point {
    Rational u, v;
    friend bool operator==(const Point&, const Point&) = default;
  };
  /// Parabolic case: the line u = u0.
  struct VerticalLine {
    Rational u0;
    friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
  };
  /// Hyperbolic case: u + v = plus and/or u - v = minus. Both present for
  /// invertible c; one only when c is itself a zero divisor.
  struct NullLines {
    std::optional<Rational> plus;
    std::optional<Rational> minus;
    friend bool operator==(const NullLines&, const NullLines&) = default;
  };

  std::variant<Empty, Point, VerticalLine, NullLines> shape;

  bool empty() const { return std::holds_alternative<Empty>(shape); }
  bool contains(const Rational& u, const Rational& v) const;
  std::string describe() const;
};

SingularSet singular_set(const MoebiusMap& g);

}  // namespace eph
