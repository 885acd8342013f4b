#pragma once

#include <cstddef>

#include "hazepde/image.hpp"
#include "hazepde/scattering.hpp"

namespace hazepde {

/// Mean over the (2r+1)^2 window clipped to the grid, normalized by the
/// number of pixels actually inside it.
[[nodiscard]] ScalarField box_mean(const ScalarField& field, std::size_t radius);

/// Guided filter (He et al. formulation) with border-truncated box windows.
[[nodiscard]] ScalarField guided_filter(const ScalarField& guide, const ScalarField& input,
                                        std::size_t radius, double reg);

/// 0.299R + 0.587G + 0.114B for color input, the channel itself for gray.
[[nodiscard]] ScalarField luminance(const ImageBuffer& image);

/// Guided-filters a raw transmission map with the image luminance as guide and
/// clamps the result to [0, 1].
[[nodiscard]] TransmissionMap refine_transmission(const ImageBuffer& image,
                                                  const TransmissionMap& t_raw,
                                                  std::size_t radius, double reg);

}  // namespace hazepde
