#include "armload/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "armload/error.hpp"

namespace armload {

namespace {

void require_rgb(const ImageBuffer& img, const char* op) {
    if (img.channels != 3) {
        throw InvalidInputError(std::string(op) + ": expected a 3-channel image, got " +
                                std::to_string(img.channels) + " channel(s)");
    }
}

}  // namespace

HsvPixel rgb_to_hsv(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
    const double r = r8, g = g8, b = b8;
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double delta = mx - mn;

    HsvPixel out;
    out.v = mx / 255.0;
    if (mx <= 0.0) return out;  // black: S = 0, H = 0
    out.s = delta / mx;
    if (delta <= 0.0) return out;  // achromatic: H = 0

    double h;
    if (mx == r) {
        h = 60.0 * (g - b) / delta;
        if (h < 0.0) h += 360.0;
    } else if (mx == g) {
        h = 60.0 * ((b - r) / delta + 2.0);
    } else {
        h = 60.0 * ((r - g) / delta + 4.0);
    }
    out.h = h;
    return out;
}

std::vector<HsvPixel> rgb_to_hsv(const ImageBuffer& img) {
    require_rgb(img, "rgb_to_hsv");
    std::vector<HsvPixel> out(img.pixel_count());
    const std::uint8_t* p = img.data.data();
    for (std::size_t i = 0; i < out.size(); ++i, p += 3) out[i] = rgb_to_hsv(p[0], p[1], p[2]);
    return out;
}

ImageBuffer rgb_to_gray(const ImageBuffer& img) {
    require_rgb(img, "rgb_to_gray");
    ImageBuffer out(img.width, img.height, 1);
    const std::uint8_t* p = img.data.data();
    for (std::size_t i = 0; i < out.data.size(); ++i, p += 3) {
        const double y = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        out.data[i] = static_cast<std::uint8_t>(std::clamp<long>(std::lround(y), 0, 255));
    }
    return out;
}

BinaryMask erode(const BinaryMask& mask, int se_radius, int iterations) {
    if (se_radius < 1) throw InvalidInputError("erode: structuring element radius must be >= 1");
    if (iterations < 1) throw InvalidInputError("erode: iterations must be >= 1");

    BinaryMask cur = mask;
    BinaryMask next(mask.width, mask.height);
    for (int it = 0; it < iterations; ++it) {
        for (int y = 0; y < cur.height; ++y) {
            for (int x = 0; x < cur.width; ++x) {
                bool keep = cur.at(x, y);
                for (int dy = -se_radius; keep && dy <= se_radius; ++dy) {
                    const int ny = y + dy;
                    if (ny < 0 || ny >= cur.height) {
                        keep = false;
                        break;
                    }
                    for (int dx = -se_radius; dx <= se_radius; ++dx) {
                        const int nx = x + dx;
                        if (nx < 0 || nx >= cur.width || !cur.at(nx, ny)) {
                            keep = false;
                            break;
                        }
                    }
                }
                next.set(x, y, keep);
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

}  // namespace armload
