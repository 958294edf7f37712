#pragma once

#include <cstdint>
#include <vector>

namespace armload {

// Raster image, 8 bits per sample, row-major, interleaved channels,
// origin at the top-left corner.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 1;  // 1 = grayscale, 3 = RGB
    std::vector<std::uint8_t> data;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int c)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * static_cast<std::size_t>(c), 0) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }

    std::uint8_t& at(int x, int y, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
};

// Per-pixel foreground map aligned with a source image.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // 1 = foreground

    BinaryMask() = default;
    BinaryMask(int w, int h)
        : width(w), height(h), bits(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}

    bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool fg) { bits[static_cast<std::size_t>(y) * width + x] = fg ? 1 : 0; }

    std::size_t foreground_count() const {
        std::size_t n = 0;
        for (auto b : bits) n += b != 0;
        return n;
    }
};

struct HsvPixel {
    double h = 0.0;  // degrees in [0, 360)
    double s = 0.0;  // [0, 1]
    double v = 0.0;  // [0, 1]
};

// Hexcone RGB -> HSV. Achromatic pixels get H = 0.
HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Per-pixel HSV values in the image's pixel order.
std::vector<HsvPixel> rgb_to_hsv(const ImageBuffer& img);

// ITU-R BT.601 luma: round(0.299 R + 0.587 G + 0.114 B).
ImageBuffer rgb_to_gray(const ImageBuffer& img);

// Morphological erosion with a (2r+1) x (2r+1) square structuring element.
// Out-of-image neighbors count as background.
BinaryMask erode(const BinaryMask& mask, int se_radius = 1, int iterations = 1);

}  // namespace armload
