#pragma once

#include <string>

#include "armload/image.hpp"

namespace armload {

// Decodes PNG, binary PPM (P6) or binary PGM (P5), sniffing the format from
// the file's magic bytes. Anything else raises UnsupportedFormatError.
ImageBuffer load_image(const std::string& path);

// Encodes by extension: .png, .ppm (3-channel only), .pgm (1-channel only).
void save_image(const ImageBuffer& img, const std::string& path);

// Masks round-trip as 8-bit PGM with foreground = 255.
void save_mask(const BinaryMask& mask, const std::string& path);
BinaryMask load_mask(const std::string& path);

}  // namespace armload
