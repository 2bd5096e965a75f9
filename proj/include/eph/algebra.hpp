#pragma once

#include "eph/rational.hpp"

#include <string>
#include <string_view>

namespace eph {

/// Square of the imaginary unit: complex (-1), dual (0) or double (+1)
/// numbers. Also used for the cycle-space unit.
enum class Sigma : int { Elliptic = -1, Parabolic = 0, Hyperbolic = 1 };

constexpr int value(Sigma s) noexcept { return static_cast<int>(s); }

/// Throws ContextError unless v is -1, 0 or 1.
Sigma sigma_from_int(int v);

/// Accepts "e", "p", "h", the full names, or "-1", "0", "1".
Sigma parse_sigma(std::string_view text);

/// Single letter "e", "p" or "h".
std::string_view short_name(Sigma s);

/// u + iota*v with iota^2 = sigma, exact rational coordinates.
///
/// Arithmetic between numbers of different algebras throws ContextError.
class HyperNum {
public:
  explicit HyperNum(Sigma sigma = Sigma::Elliptic) : sigma_(sigma) {}
  HyperNum(Rational re, Rational im, Sigma sigma)
      : re_(std::move(re)), im_(std::move(im)), sigma_(sigma) {}

  static HyperNum real(Rational re, Sigma sigma) { return {std::move(re), 0, sigma}; }
  static HyperNum unit(Sigma sigma) { return {0, 1, sigma}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  Sigma sigma() const noexcept { return sigma_; }

  bool is_real() const { return im_ == 0; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  /// The same coordinates read in another algebra.
  HyperNum with_sigma(Sigma sigma) const { return {re_, im_, sigma}; }

  friend bool operator==(const HyperNum&, const HyperNum&) = default;

private:
  Rational re_;
  Rational im_;
  Sigma sigma_;
};

HyperNum operator+(const HyperNum& z, const HyperNum& w);
HyperNum operator-(const HyperNum& z, const HyperNum& w);
HyperNum operator-(const HyperNum& z);
HyperNum operator*(const HyperNum& z, const HyperNum& w);
HyperNum operator*(const Rational& r, const HyperNum& z);
/// z * invert(w).
HyperNum operator/(const HyperNum& z, const HyperNum& w);

HyperNum conj(const HyperNum& z);

/// u^2 - sigma v^2 = z * conj(z). Multiplicative.
Rational norm(const HyperNum& z);

/// True iff norm(z) == 0; zero itself counts.
bool is_zero_divisor(const HyperNum& z);

/// conj(z) / norm(z). Throws NonInvertible for zero divisors.
HyperNum invert(const HyperNum& z);

std::string to_string(const HyperNum& z);

}  // namespace eph
