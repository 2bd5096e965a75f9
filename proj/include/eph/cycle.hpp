#pragma once

#include "eph/algebra.hpp"
#include "eph/moebius.hpp"

#include <string>

namespace eph {

/// A point (u, v) of the point plane.
struct Point {
  Rational u, v;

  HyperNum as_number(Sigma sigma) const { return {u, v, sigma}; }
  static Point of(const HyperNum& z) { return {z.re(), z.im()}; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Metric of the cycle space: the square of the cycle unit (independent of
/// the point-space sigma) and the extra scale s carried by the matrix
/// representation.
class CycleContext {
public:
  CycleContext() = default;
  /// Throws std::invalid_argument for s == 0.
  CycleContext(Sigma sigma_cycle, Rational s = 1);

  Sigma sigma_cycle() const noexcept { return sigma_cycle_; }
  const Rational& s() const noexcept { return s_; }

  /// sigma_cycle = sigma, s = 1: the context used for points.
  static CycleContext matching(Sigma sigma) { return {sigma, 1}; }

private:
  Sigma sigma_cycle_ = Sigma::Elliptic;
  Rational s_ = 1;
};

/// Representative (k, l, n, m) of a point of the projective cycle space,
/// i.e. of the conic  k(u^2 - sigma v^2) - 2lu - 2nv + m = 0.
///
/// operator== compares representatives; use projectively_equal for cycles.
class Cycle {
public:
  /// Throws std::invalid_argument if all four entries vanish.
  Cycle(Rational k, Rational l, Rational n, Rational m);

  const Rational& k() const noexcept { return k_; }
  const Rational& l() const noexcept { return l_; }
  const Rational& n() const noexcept { return n_; }
  const Rational& m() const noexcept { return m_; }

  Cycle scaled(const Rational& lambda) const;
  bool is_line() const { return k_ == 0; }

  friend bool operator==(const Cycle&, const Cycle&) = default;

private:
  Rational k_, l_, n_, m_;
};

bool projectively_equal(const Cycle& c, const Cycle& d);

std::string to_string(const Cycle& c);

/// Left-hand side of the cycle equation at p for the stored representative.
Rational eval(const Cycle& c, const Point& p, Sigma sigma);
bool on_cycle(const Cycle& c, const Point& p, Sigma sigma);

/// ((l + i s n, -m), (k, -l + i s n)) over the cycle-space algebra.
Matrix2 fscc_matrix(const Cycle& c, const CycleContext& ctx);

/// Reads (k, l, n, m) back from a matrix of the fscc_matrix shape. Throws
/// GeometryError when the matrix does not have that shape.
Cycle cycle_from_fscc(const Matrix2& x, const CycleContext& ctx);

/// Image of c under g, computed on the matrix side.
///
/// For real g this is g C g^-1. A g with hypercomplex entries must live in
/// the cycle-space algebra (ContextError otherwise) and acts by the twisted
/// similarity conj(g) C g^-1 when sigma_cycle * s > 0 (hyperbolic, s > 0)
/// and g C conj(g)^-1 otherwise; this is what keeps zero-radius cycles
/// attached to the images of their centres. The result is divided by
/// det g only when det g is real, so it is always a representative of the
/// image but not always det-preserving.
Cycle similarity(const MoebiusMap& g, const Cycle& c, const CycleContext& ctx);

/// sigma_cycle s^2 n^2 - l^2 + m k.
Rational det_inv(const Cycle& c, const CycleContext& ctx);

/// 2 i s n in the cycle-space algebra.
HyperNum trace_inv(const Cycle& c, const CycleContext& ctx);

/// -det / k^2: r^2 for an elliptic circle of radius r. Throws IsALine.
Rational radius_sq(const Cycle& c, const CycleContext& ctx);

/// (l/k, -sigma_cycle n/k) for sigma_cycle = +-1, (l/k, 0) for the
/// parabolic cycle space. Throws IsALine.
Point centre(const Cycle& c, const CycleContext& ctx);

/// Quadruple with zero determinant (sigma_cycle = sigma, s = 1) whose
/// centre is p:
///   elliptic   (1, u,  v, u^2 + v^2)
///   parabolic  (1, u,  v, u^2)
///   hyperbolic (1, u, -v, u^2 - v^2)
Cycle zero_radius_at(const Point& p, Sigma sigma);

bool is_zero_radius(const Cycle& c, const CycleContext& ctx);

/// (1, l/k, n/k, m/k). Throws IsALine.
Cycle normalize_k(const Cycle& c);

/// Coprime integer representative with positive leading nonzero entry.
Cycle canonicalize(const Cycle& c);

}  // namespace eph
