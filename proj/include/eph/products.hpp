#pragma once

#include "eph/cycle.hpp"

namespace eph {

/// Moebius-invariant inner product of two cycle representatives:
///
///   2 l l' - 2 sigma_cycle s^2 n n' - (m k' + k m')
///
/// i.e. the real part of tr(C conj(C')) with the cycle unit conjugated in
/// the second factor. Bilinear in the representatives, so only its
/// vanishing (and sign after consistent scaling) is projective.
/// inner(C, C) == -2 det_inv(C).
Rational inner(const Cycle& c, const Cycle& d, const CycleContext& ctx);

bool is_orthogonal(const Cycle& c, const Cycle& d, const CycleContext& ctx);

/// inner(C, zero_radius_at(p, sigma)) in the matching cycle context;
/// equals -eval(C, p, sigma), so it vanishes iff p lies on C.
/// Throws Unsupported for the parabolic plane, where the product carries
/// no n-term and cannot see the v coordinate.
Rational incidence_defect(const Cycle& c, const Point& p, Sigma sigma);

}  // namespace eph
