#include "armload/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include "armload/error.hpp"

namespace armload {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open '" + path + "'");
    return f;
}

void png_quiet_warn(png_structp, png_const_charp) {}

ImageBuffer load_png(std::FILE* f, const std::string& path) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, png_quiet_warn);
    if (!png) throw IoError("png: out of memory");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png: out of memory");
    }

    ImageBuffer img;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png: failed to decode '" + path + "'");
    }

    png_init_io(png, f);
    png_read_info(png, info);

    png_uint_32 w = 0, h = 0;
    int bit_depth = 0, color_type = 0;
    png_get_IHDR(png, info, &w, &h, &bit_depth, &color_type, nullptr, nullptr, nullptr);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw UnsupportedFormatError("png '" + path + "': unsupported channel layout");
    }

    img = ImageBuffer(static_cast<int>(w), static_cast<int>(h), channels);
    rows.resize(h);
    const std::size_t stride = static_cast<std::size_t>(w) * channels;
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.data.data() + y * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void save_png(const ImageBuffer& img, const std::string& path) {
    FilePtr f = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, png_quiet_warn);
    if (!png) throw IoError("png: out of memory");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png: out of memory");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png: failed to encode '" + path + "'");
    }

    png_init_io(png, f.get());
    const int color_type = img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width), static_cast<png_uint_32>(img.height), 8,
                 color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    const std::size_t stride = static_cast<std::size_t>(img.width) * img.channels;
    for (int y = 0; y < img.height; ++y) {
        png_write_row(png, const_cast<png_bytep>(img.data.data() + static_cast<std::size_t>(y) * stride));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

// Reads one PNM header token, skipping whitespace and '#' comments.
std::string pnm_token(std::FILE* f, const std::string& path) {
    std::string tok;
    int c;
    while ((c = std::fgetc(f)) != EOF) {
        if (c == '#') {
            while ((c = std::fgetc(f)) != EOF && c != '\n') {
            }
        } else if (!std::isspace(c)) {
            break;
        }
    }
    if (c == EOF) throw ParseError("pnm '" + path + "': truncated header");
    do {
        tok.push_back(static_cast<char>(c));
        c = std::fgetc(f);
    } while (c != EOF && !std::isspace(c));
    return tok;
}

long pnm_int(std::FILE* f, const std::string& path, const char* what) {
    const std::string tok = pnm_token(f, path);
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || v < 0) {
        throw ParseError("pnm '" + path + "': bad " + what + " '" + tok + "'");
    }
    return v;
}

ImageBuffer load_pnm(std::FILE* f, const std::string& path, int channels) {
    const long w = pnm_int(f, path, "width");
    const long h = pnm_int(f, path, "height");
    const long maxval = pnm_int(f, path, "maxval");
    if (w < 1 || h < 1) throw ParseError("pnm '" + path + "': bad dimensions");
    if (maxval > 255) throw UnsupportedFormatError("pnm '" + path + "': 16-bit samples not supported");
    if (maxval < 1) throw ParseError("pnm '" + path + "': bad maxval");

    ImageBuffer img(static_cast<int>(w), static_cast<int>(h), channels);
    if (std::fread(img.data.data(), 1, img.data.size(), f) != img.data.size()) {
        throw ParseError("pnm '" + path + "': truncated pixel data");
    }
    return img;
}

void save_pnm(const ImageBuffer& img, const std::string& path) {
    FilePtr f = open_file(path, "wb");
    const char* magic = img.channels == 3 ? "P6" : "P5";
    std::fprintf(f.get(), "%s\n%d %d\n255\n", magic, img.width, img.height);
    if (std::fwrite(img.data.data(), 1, img.data.size(), f.get()) != img.data.size()) {
        throw IoError("cannot write '" + path + "'");
    }
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    if (s.size() < suffix.size()) return false;
    return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(),
                      [](char a, char b) { return std::tolower(a) == std::tolower(b); });
}

}  // namespace

ImageBuffer load_image(const std::string& path) {
    FilePtr f = open_file(path, "rb");
    unsigned char magic[8] = {0};
    const std::size_t got = std::fread(magic, 1, sizeof magic, f.get());

    static const unsigned char kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (got == 8 && std::memcmp(magic, kPngSig, 8) == 0) {
        std::rewind(f.get());
        return load_png(f.get(), path);
    }
    if (got >= 2 && magic[0] == 'P' && (magic[1] == '6' || magic[1] == '5')) {
        std::fseek(f.get(), 2, SEEK_SET);
        return load_pnm(f.get(), path, magic[1] == '6' ? 3 : 1);
    }
    throw UnsupportedFormatError("'" + path + "': not a PNG, PPM (P6) or PGM (P5) file");
}

void save_image(const ImageBuffer& img, const std::string& path) {
    if (img.width < 1 || img.height < 1 || (img.channels != 1 && img.channels != 3) ||
        img.data.size() != img.pixel_count() * img.channels) {
        throw InvalidInputError("save_image: malformed image buffer");
    }
    if (has_suffix(path, ".png")) {
        save_png(img, path);
    } else if (has_suffix(path, ".ppm")) {
        if (img.channels != 3) throw InvalidInputError("save_image: PPM requires a 3-channel image");
        save_pnm(img, path);
    } else if (has_suffix(path, ".pgm")) {
        if (img.channels != 1) throw InvalidInputError("save_image: PGM requires a 1-channel image");
        save_pnm(img, path);
    } else {
        throw UnsupportedFormatError("save_image: unsupported extension on '" + path + "'");
    }
}

void save_mask(const BinaryMask& mask, const std::string& path) {
    ImageBuffer img(mask.width, mask.height, 1);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) img.data[i] = mask.bits[i] ? 255 : 0;
    save_image(img, path);
}

BinaryMask load_mask(const std::string& path) {
    const ImageBuffer img = load_image(path);
    if (img.channels != 1) throw InvalidInputError("load_mask: '" + path + "' is not grayscale");
    BinaryMask mask(img.width, img.height);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) mask.bits[i] = img.data[i] >= 128 ? 1 : 0;
    return mask;
}

}  // namespace armload
