#pragma once

#include <cstdint>

#include "armload/features.hpp"
#include "armload/image.hpp"

namespace armload {

inline constexpr int kLbpBins = 59;  // 58 uniform patterns + 1 catch-all bin

struct LbpConfig {
    int grid_n = 3;  // cells per side
};

// 8-bit code for an interior pixel. Neighbors are read clockwise from the
// top-left (TL, T, TR, R, BR, B, BL, L); the first neighbor lands in the most
// significant bit. A bit is 0 iff the center is strictly greater than the
// neighbor.
std::uint8_t lbp_code(const ImageBuffer& gray, int x, int y);

// Maps the 58 uniform codes (at most 2 circular 0<->1 transitions) to bins
// 0..57 in ascending code order; every other code maps to bin 58.
int uniform_bin(std::uint8_t code);

// Concatenated per-cell histograms of uniform LBP codes, row-major cells,
// unnormalized counts. Length grid_n^2 * 59.
FeatureVector lbp_features(const ImageBuffer& gray, const LbpConfig& cfg = {});

}  // namespace armload
