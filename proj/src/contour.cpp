#include "armload/contour.hpp"

#include <array>
#include <vector>

#include "armload/error.hpp"

namespace armload {

namespace {

// Clockwise Moore neighborhood with y pointing down.
constexpr std::array<int, 8> kDx = {0, 1, 1, 1, 0, -1, -1, -1};  // N NE E SE S SW W NW
constexpr std::array<int, 8> kDy = {-1, -1, 0, 1, 1, 1, 0, -1};

int delta_to_dir(int dx, int dy) {
    for (int d = 0; d < 8; ++d) {
        if (kDx[d] == dx && kDy[d] == dy) return d;
    }
    return -1;
}

std::vector<PixelPoint> trace_boundary(const BinaryMask& mask, PixelPoint start,
                                       std::size_t component_size) {
    auto fg = [&](int x, int y) {
        return x >= 0 && y >= 0 && x < mask.width && y < mask.height && mask.at(x, y);
    };

    std::vector<PixelPoint> points{start};
    std::vector<char> visited(static_cast<std::size_t>(mask.width) * mask.height, 0);
    visited[static_cast<std::size_t>(start.y) * mask.width + start.x] = 1;

    // The pixel west of the topmost-leftmost component pixel is background.
    int backtrack_dir = 6;  // W
    PixelPoint cur = start;
    PixelPoint first_move{-1, -1};
    const std::size_t step_cap = 4 * component_size + 8;

    for (std::size_t step = 0; step < step_cap; ++step) {
        int found_dir = -1;
        for (int i = 1; i <= 8; ++i) {
            const int d = (backtrack_dir + i) % 8;
            if (fg(cur.x + kDx[d], cur.y + kDy[d])) {
                found_dir = d;
                break;
            }
        }
        if (found_dir < 0) break;  // isolated pixel

        const PixelPoint next{cur.x + kDx[found_dir], cur.y + kDy[found_dir]};
        if (cur == start) {
            // Jacob's criterion: stop when the initial move repeats.
            if (first_move.x < 0) {
                first_move = next;
            } else if (next == first_move) {
                break;
            }
        }

        // New backtrack: the neighbor checked just before the hit, seen from
        // the new pixel. Ring-adjacent Moore cells are king-adjacent, so the
        // delta is always a valid direction.
        const int prev_dir = (found_dir + 7) % 8;
        const PixelPoint prev_checked{cur.x + kDx[prev_dir], cur.y + kDy[prev_dir]};
        backtrack_dir = delta_to_dir(prev_checked.x - next.x, prev_checked.y - next.y);
        cur = next;

        auto& seen = visited[static_cast<std::size_t>(cur.y) * mask.width + cur.x];
        if (!seen) {
            seen = 1;
            points.push_back(cur);
        }
    }
    return points;
}

std::vector<Contour> extract_contours_impl(const BinaryMask& mask, const ImageBuffer* gray) {
    if (gray && (gray->width != mask.width || gray->height != mask.height || gray->channels != 1)) {
        throw InvalidInputError("extract_contours: grayscale image does not match the mask");
    }

    std::vector<Contour> contours;
    const std::size_t n = static_cast<std::size_t>(mask.width) * mask.height;
    std::vector<char> labeled(n, 0);
    std::vector<PixelPoint> queue;

    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * mask.width + x;
            if (!mask.bits[idx] || labeled[idx]) continue;

            // Flood-fill the component to mark it and count its pixels.
            std::size_t component_size = 0;
            queue.clear();
            queue.push_back({x, y});
            labeled[idx] = 1;
            while (!queue.empty()) {
                const PixelPoint p = queue.back();
                queue.pop_back();
                ++component_size;
                for (int d = 0; d < 8; ++d) {
                    const int nx = p.x + kDx[d];
                    const int ny = p.y + kDy[d];
                    if (nx < 0 || ny < 0 || nx >= mask.width || ny >= mask.height) continue;
                    const std::size_t nidx = static_cast<std::size_t>(ny) * mask.width + nx;
                    if (mask.bits[nidx] && !labeled[nidx]) {
                        labeled[nidx] = 1;
                        queue.push_back({nx, ny});
                    }
                }
            }

            Contour c;
            c.points = trace_boundary(mask, {x, y}, component_size);
            c.intensities.reserve(c.points.size());
            for (const auto& p : c.points) {
                c.intensities.push_back(gray ? gray->at(p.x, p.y) : std::uint8_t{1});
            }
            contours.push_back(std::move(c));
        }
    }
    return contours;
}

}  // namespace

std::vector<Contour> extract_contours(const BinaryMask& mask, const ImageBuffer& gray) {
    return extract_contours_impl(mask, &gray);
}

std::vector<Contour> extract_contours(const BinaryMask& mask) {
    return extract_contours_impl(mask, nullptr);
}

}  // namespace armload
