#pragma once

#include "armload/features.hpp"
#include "armload/image.hpp"

namespace armload {

struct ColorHistConfig {
    int grid_n = 3;
    int bins_per_channel = 5;
    // Segmentation zeroes the background, so exact-(0,0,0) pixels carry no
    // signal and are skipped by default.
    bool skip_background = true;
};

// Joint Hue x Saturation histogram per grid cell: H uniform on [0, 360),
// S uniform on [0, 1] with S = 1 in the last bin. Cells concatenate row-major;
// within a cell the bin index is h_bin * bins_per_channel + s_bin. Counts are
// unnormalized. Length grid_n^2 * bins_per_channel^2.
FeatureVector hc_features(const ImageBuffer& img, const ColorHistConfig& cfg = {});

}  // namespace armload
