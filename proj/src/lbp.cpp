#include "armload/lbp.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "armload/error.hpp"

namespace armload {

namespace {

int circular_transitions(std::uint8_t code) {
    int t = 0;
    for (int i = 0; i < 8; ++i) {
        const int a = (code >> i) & 1;
        const int b = (code >> ((i + 1) % 8)) & 1;
        t += a != b;
    }
    return t;
}

std::array<std::uint8_t, 256> build_uniform_table() {
    std::array<std::uint8_t, 256> table{};
    std::uint8_t next = 0;
    for (int code = 0; code < 256; ++code) {
        table[static_cast<std::size_t>(code)] =
            circular_transitions(static_cast<std::uint8_t>(code)) <= 2 ? next++ : kLbpBins - 1;
    }
    return table;
}

const std::array<std::uint8_t, 256>& uniform_table() {
    static const std::array<std::uint8_t, 256> table = build_uniform_table();
    return table;
}

}  // namespace

std::uint8_t lbp_code(const ImageBuffer& gray, int x, int y) {
    if (gray.channels != 1) throw InvalidInputError("lbp_code: expected a grayscale image");
    if (x < 1 || y < 1 || x > gray.width - 2 || y > gray.height - 2) {
        throw InvalidInputError("lbp_code: (" + std::to_string(x) + "," + std::to_string(y) +
                                ") is not an interior pixel");
    }
    const std::uint8_t c = gray.at(x, y);
    // Clockwise from top-left; MSB first.
    static constexpr int kDx[8] = {-1, 0, 1, 1, 1, 0, -1, -1};
    static constexpr int kDy[8] = {-1, -1, -1, 0, 1, 1, 1, 0};
    std::uint8_t code = 0;
    for (int i = 0; i < 8; ++i) {
        const std::uint8_t nb = gray.at(x + kDx[i], y + kDy[i]);
        code = static_cast<std::uint8_t>(code << 1);
        if (!(c > nb)) code |= 1;
    }
    return code;
}

int uniform_bin(std::uint8_t code) { return uniform_table()[code]; }

FeatureVector lbp_features(const ImageBuffer& gray, const LbpConfig& cfg) {
    if (gray.channels != 1) throw InvalidInputError("lbp_features: expected a grayscale image");
    if (cfg.grid_n < 1) throw InvalidInputError("lbp_features: grid_n must be >= 1");
    if (gray.width < cfg.grid_n + 2 || gray.height < cfg.grid_n + 2) {
        throw InvalidInputError("lbp_features: image smaller than " + std::to_string(cfg.grid_n + 2) +
                                " pixels per side");
    }

    const int n = cfg.grid_n;
    const int cell_w = gray.width / n;
    const int cell_h = gray.height / n;
    FeatureVector fv;
    fv.method = Method::kLbp;
    fv.values.assign(static_cast<std::size_t>(n) * n * kLbpBins, 0.0);

    const auto& table = uniform_table();
    for (int y = 1; y < gray.height - 1; ++y) {
        // Remainder pixels belong to the last row/column of cells.
        const int cy = std::min(y / cell_h, n - 1);
        for (int x = 1; x < gray.width - 1; ++x) {
            const int cx = std::min(x / cell_w, n - 1);
            const std::size_t cell = static_cast<std::size_t>(cy) * n + cx;
            fv.values[cell * kLbpBins + table[lbp_code(gray, x, y)]] += 1.0;
        }
    }
    return fv;
}

}  // namespace armload
