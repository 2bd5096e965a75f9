#include "eph/algebra.hpp"

#include "eph/errors.hpp"

#include <string>

namespace eph {

namespace {

void require_same(const HyperNum& z, const HyperNum& w) {
  if (z.sigma() != w.sigma())
    throw ContextError("hypercomplex operands from different algebras (sigma " +
                       std::to_string(value(z.sigma())) + " vs " + std::to_string(value(w.sigma())) + ")");
}

}  // namespace

Sigma sigma_from_int(int v) {
  switch (v) {
    case -1: return Sigma::Elliptic;
    case 0: return Sigma::Parabolic;
    case 1: return Sigma::Hyperbolic;
    default: throw ContextError("sigma must be -1, 0 or 1, got " + std::to_string(v));
  }
}

Sigma parse_sigma(std::string_view text) {
  if (text == "e" || text == "elliptic" || text == "-1") return Sigma::Elliptic;
  if (text == "p" || text == "parabolic" || text == "0") return Sigma::Parabolic;
  if (text == "h" || text == "hyperbolic" || text == "1" || text == "+1") return Sigma::Hyperbolic;
  throw ContextError("unknown sigma '" + std::string(text) + "' (expected e|p|h or -1|0|1)");
}

std::string_view short_name(Sigma s) {
  switch (s) {
    case Sigma::Elliptic: return "e";
    case Sigma::Parabolic: return "p";
    case Sigma::Hyperbolic: return "h";
  }
  return "?";
}

HyperNum operator+(const HyperNum& z, const HyperNum& w) {
  require_same(z, w);
  return {z.re() + w.re(), z.im() + w.im(), z.sigma()};
}

HyperNum operator-(const HyperNum& z, const HyperNum& w) {
  require_same(z, w);
  return {z.re() - w.re(), z.im() - w.im(), z.sigma()};
}

HyperNum operator-(const HyperNum& z) { return {-z.re(), -z.im(), z.sigma()}; }

HyperNum operator*(const HyperNum& z, const HyperNum& w) {
  require_same(z, w);
  // (a + ib)(c + id) = (ac + sigma bd) + i(ad + bc)
  Rational re = z.re() * w.re() + value(z.sigma()) * z.im() * w.im();
  Rational im = z.re() * w.im() + z.im() * w.re();
  return {std::move(re), std::move(im), z.sigma()};
}

HyperNum operator*(const Rational& r, const HyperNum& z) { return {r * z.re(), r * z.im(), z.sigma()}; }

HyperNum operator/(const HyperNum& z, const HyperNum& w) { return z * invert(w); }

HyperNum conj(const HyperNum& z) { return {z.re(), -z.im(), z.sigma()}; }

Rational norm(const HyperNum& z) { return z.re() * z.re() - value(z.sigma()) * z.im() * z.im(); }

bool is_zero_divisor(const HyperNum& z) { return norm(z) == 0; }

HyperNum invert(const HyperNum& z) {
  Rational n = norm(z);
  if (n == 0) throw NonInvertible("cannot invert zero divisor " + to_string(z));
  return {z.re() / n, -z.im() / n, z.sigma()};
}

std::string to_string(const HyperNum& z) {
  return "(" + to_string(z.re()) + " + " + to_string(z.im()) + "i)[" + std::string(short_name(z.sigma())) + "]";
}

}  // namespace eph
