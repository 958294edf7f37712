#pragma once

#include <cstdint>
#include <vector>

#include "armload/image.hpp"

namespace armload {

struct PixelPoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

// Outer boundary of one 8-connected foreground component. Points are listed in
// traversal order, each boundary pixel once; intensities carry the grayscale
// value at each point.
struct Contour {
    std::vector<PixelPoint> points;
    std::vector<std::uint8_t> intensities;
};

// Moore-neighbor tracing with Jacob's stopping criterion over the 8-connected
// foreground components, one outer contour per component, components in
// row-major order of their topmost-leftmost pixel. Intensities are sampled
// from `gray`, which must match the mask dimensions.
std::vector<Contour> extract_contours(const BinaryMask& mask, const ImageBuffer& gray);

// Same tracing with all intensities fixed to 1 (shape-only moments).
std::vector<Contour> extract_contours(const BinaryMask& mask);

}  // namespace armload
