#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "armload/image.hpp"

namespace armload {

struct SegmentationResult {
    ImageBuffer image;        // input with background pixels set to (0,0,0)
    BinaryMask mask;          // post-erosion foreground
    double foreground_fraction = 0.0;
    // Set when the foreground fraction falls outside [0.05, 0.95]; the caller
    // decides how to surface it.
    bool fraction_warning = false;
};

// Clusters the image's RGB triples with k-means, labels the cluster whose
// center is most blue (largest B - max(R,G)) as background, erodes the
// foreground mask and zeroes background pixels in the output image.
SegmentationResult segment_arm(const ImageBuffer& img, int k = 2, int erode_iters = 1,
                               std::uint64_t seed = 0, int jobs = 1);

}  // namespace armload
