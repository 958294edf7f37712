#include "armload/colorhist.hpp"

#include <algorithm>
#include <cmath>

#include "armload/error.hpp"

namespace armload {

FeatureVector hc_features(const ImageBuffer& img, const ColorHistConfig& cfg) {
    if (img.channels != 3) throw InvalidInputError("hc_features: expected a 3-channel image");
    if (cfg.grid_n < 1 || cfg.bins_per_channel < 1) {
        throw InvalidInputError("hc_features: grid_n and bins_per_channel must be >= 1");
    }

    const int n = cfg.grid_n;
    const int bins = cfg.bins_per_channel;
    const int cell_w = std::max(1, img.width / n);
    const int cell_h = std::max(1, img.height / n);

    FeatureVector fv;
    fv.method = Method::kHc;
    fv.values.assign(static_cast<std::size_t>(n) * n * bins * bins, 0.0);

    const std::uint8_t* p = img.data.data();
    for (int y = 0; y < img.height; ++y) {
        const int cy = std::min(y / cell_h, n - 1);
        for (int x = 0; x < img.width; ++x, p += 3) {
            if (cfg.skip_background && p[0] == 0 && p[1] == 0 && p[2] == 0) continue;
            const int cx = std::min(x / cell_w, n - 1);
            const HsvPixel hsv = rgb_to_hsv(p[0], p[1], p[2]);
            const int h_bin = std::min(static_cast<int>(hsv.h / 360.0 * bins), bins - 1);
            const int s_bin = std::min(static_cast<int>(hsv.s * bins), bins - 1);
            const std::size_t cell = static_cast<std::size_t>(cy) * n + cx;
            fv.values[(cell * bins + h_bin) * bins + s_bin] += 1.0;
        }
    }
    return fv;
}

}  // namespace armload
