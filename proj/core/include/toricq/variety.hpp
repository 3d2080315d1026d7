#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "toricq/cohomology.hpp"
#include "toricq/fan.hpp"
#include "toricq/picard.hpp"

namespace toricq {

/// A fan together with its weight matrix and cohomology ring, built once and
/// shared read-only by every computation on the variety.
struct ToricVariety {
  Fan fan;
  WeightMatrix weights;
  std::shared_ptr<const CohomologyRing> ring;

  static std::shared_ptr<const ToricVariety> make(Fan fan,
                                                  std::optional<std::size_t> basis_cone = std::nullopt);
};

}  // namespace toricq
