#include "armload/segmentation.hpp"

#include <algorithm>
#include <limits>

#include "armload/error.hpp"
#include "armload/kmeans.hpp"

namespace armload {

SegmentationResult segment_arm(const ImageBuffer& img, int k, int erode_iters, std::uint64_t seed,
                               int jobs) {
    if (img.channels != 3) throw InvalidInputError("segment_arm: expected a 3-channel image");
    if (img.pixel_count() < static_cast<std::size_t>(k)) {
        throw InsufficientDataError("segment_arm: image has fewer pixels than k");
    }

    std::vector<std::vector<double>> pixels(img.pixel_count());
    const std::uint8_t* p = img.data.data();
    for (std::size_t i = 0; i < pixels.size(); ++i, p += 3) {
        pixels[i] = {static_cast<double>(p[0]), static_cast<double>(p[1]), static_cast<double>(p[2])};
    }

    const KMeansModel model = kmeans_fit(pixels, k, 100, seed, jobs);

    // Background cluster: center with the largest blue margin B - max(R, G).
    int background = 0;
    double best_margin = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < model.k; ++j) {
        const auto& c = model.centers[static_cast<std::size_t>(j)];
        const double margin = c[2] - std::max(c[0], c[1]);
        if (margin > best_margin) {
            best_margin = margin;
            background = j;
        }
    }

    BinaryMask mask(img.width, img.height);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        mask.bits[i] = kmeans_assign(model, pixels[i]) != background ? 1 : 0;
    }
    mask = erode(mask, 1, erode_iters);

    SegmentationResult result;
    result.mask = std::move(mask);
    result.image = img;
    std::uint8_t* out = result.image.data.data();
    for (std::size_t i = 0; i < result.mask.bits.size(); ++i, out += 3) {
        if (!result.mask.bits[i]) out[0] = out[1] = out[2] = 0;
    }
    result.foreground_fraction =
        static_cast<double>(result.mask.foreground_count()) / static_cast<double>(img.pixel_count());
    result.fraction_warning = result.foreground_fraction < 0.05 || result.foreground_fraction > 0.95;
    return result;
}

}  // namespace armload
