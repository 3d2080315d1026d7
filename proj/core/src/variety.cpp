#include "toricq/variety.hpp"

namespace toricq {

std::shared_ptr<const ToricVariety> ToricVariety::make(Fan fan, std::optional<std::size_t> basis_cone) {
  auto weights = weight_matrix(fan, basis_cone);
  auto ring = std::make_shared<const CohomologyRing>(build_ring(fan, weights));
  return std::make_shared<const ToricVariety>(
      ToricVariety{std::move(fan), std::move(weights), std::move(ring)});
}

}  // namespace toricq
