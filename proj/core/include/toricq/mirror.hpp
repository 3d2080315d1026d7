#pragma once

#include <memory>
#include <vector>

#include "toricq/cohomology.hpp"
#include "toricq/novikov.hpp"
#include "toricq/series.hpp"

namespace toricq {

/// A change of variables (tau_0, ..., tau_r) = tau(t, Q) on H^0 + H^2, written
/// in the coordinates t_0 * 1 + sum_i t_i * L_i. coords[j] is the j-th
/// output coordinate as a series in Q and the input parameters.
struct MirrorMap {
  std::size_t basis_cone = 0;
  NovikovTruncation truncation;
  std::vector<NovikovPoly> coords;
};

/// The z^{-1} coefficient of I, converted to (tau_0, ..., tau_r). Throws
/// MirrorMapNotSmall when that coefficient has a component in divisor
/// degree >= 2 for any retained beta.
MirrorMap mirror_map(const IFunctionSeries& i_function);

MirrorMap identity_map(const MirrorMap& shape);
bool is_identity(const MirrorMap& map);

/// Formal inverse, solved order by order in the Novikov degree by fixed
/// point iteration t = tau - delta(t). Throws MirrorMapNotInvertible when the
/// Q^0 part is not the identity. When the corrections have terms constant in
/// t, the result switches to the weighted truncation (see NovikovTruncation).
MirrorMap invert_mirror_map(const MirrorMap& tau);

/// outer(inner(t)).
MirrorMap compose(const MirrorMap& outer, const MirrorMap& inner);

/// I(t(tau), z): substitutes the inverse mirror map into I and re-truncates.
/// Only the pure change-of-variables regime is covered (no derivative terms).
IFunctionSeries J_from_I(const IFunctionSeries& i_function, const MirrorMap& inverse);

}  // namespace toricq
