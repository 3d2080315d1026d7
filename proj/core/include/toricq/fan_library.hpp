#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricq/fan.hpp"

namespace toricq {

/// Rays e_1..e_n, -(e_1+...+e_n); cones are all n-subsets.
Fan projective_space_fan(std::size_t n);

/// Rays (u, 0) then (0, v); cones are unions of a cone of each factor, with
/// the first factor's cone index varying slowest.
Fan product_fan(const Fan& a, const Fan& b);

/// Hirzebruch surface F_a: rays (1,0), (-1,-a), (0,1), (0,-1).
Fan hirzebruch_fan(std::int64_t a);

}  // namespace toricq
