#include "armload/moments.hpp"

#include <cmath>
#include <cstddef>

#include "armload/error.hpp"

namespace armload {

std::array<double, 31> MomentSet::flatten() const {
    return {spatial.m00,     spatial.m10,     spatial.m01,     spatial.m20,     spatial.m11,
            spatial.m02,     spatial.m30,     spatial.m21,     spatial.m12,     spatial.m03,
            central.mu20,    central.mu11,    central.mu02,    central.mu30,    central.mu21,
            central.mu12,    central.mu03,    normalized.nu20, normalized.nu11, normalized.nu02,
            normalized.nu30, normalized.nu21, normalized.nu12, normalized.nu03, hu[0],
            hu[1],           hu[2],           hu[3],           hu[4],           hu[5],
            hu[6]};
}

SpatialMoments spatial_moments(const Contour& c) {
    if (c.points.empty()) throw InvalidInputError("spatial_moments: empty contour");
    SpatialMoments m;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const double x = c.points[i].x;
        const double y = c.points[i].y;
        const double w = c.intensities[i];
        const double x2 = x * x, y2 = y * y;
        m.m00 += w;
        m.m10 += w * x;
        m.m01 += w * y;
        m.m20 += w * x2;
        m.m11 += w * x * y;
        m.m02 += w * y2;
        m.m30 += w * x2 * x;
        m.m21 += w * x2 * y;
        m.m12 += w * x * y2;
        m.m03 += w * y2 * y;
    }
    return m;
}

CentralMoments central_moments(const SpatialMoments& m) {
    if (m.m00 == 0.0) throw InvalidInputError("central_moments: degenerate contour (m00 == 0)");
    const double xb = m.m10 / m.m00;
    const double yb = m.m01 / m.m00;
    CentralMoments mu;
    mu.mu20 = m.m20 - xb * m.m10;
    mu.mu11 = m.m11 - xb * m.m01;
    mu.mu02 = m.m02 - yb * m.m01;
    mu.mu30 = m.m30 - 3.0 * xb * m.m20 + 2.0 * xb * xb * m.m10;
    mu.mu21 = m.m21 - 2.0 * xb * m.m11 - yb * m.m20 + 2.0 * xb * xb * m.m01;
    mu.mu12 = m.m12 - 2.0 * yb * m.m11 - xb * m.m02 + 2.0 * yb * yb * m.m10;
    mu.mu03 = m.m03 - 3.0 * yb * m.m02 + 2.0 * yb * yb * m.m01;
    return mu;
}

NormalizedMoments normalized_moments(const CentralMoments& mu, double m00) {
    if (m00 <= 0.0) throw InvalidInputError("normalized_moments: m00 must be positive");
    const double s2 = std::pow(m00, 2.0);   // 1 + (p+q)/2 with p+q = 2
    const double s3 = std::pow(m00, 2.5);   // 1 + (p+q)/2 with p+q = 3
    NormalizedMoments nu;
    nu.nu20 = mu.mu20 / s2;
    nu.nu11 = mu.mu11 / s2;
    nu.nu02 = mu.mu02 / s2;
    nu.nu30 = mu.mu30 / s3;
    nu.nu21 = mu.mu21 / s3;
    nu.nu12 = mu.mu12 / s3;
    nu.nu03 = mu.mu03 / s3;
    return nu;
}

HuMoments hu_moments(const NormalizedMoments& nu) {
    const double a = nu.nu20 + nu.nu02;
    const double b = nu.nu20 - nu.nu02;
    const double c = nu.nu30 - 3.0 * nu.nu12;
    const double d = 3.0 * nu.nu21 - nu.nu03;
    const double e = nu.nu30 + nu.nu12;
    const double f = nu.nu21 + nu.nu03;

    HuMoments h{};
    h[0] = a;
    h[1] = b * b + 4.0 * nu.nu11 * nu.nu11;
    h[2] = c * c + d * d;
    h[3] = e * e + f * f;
    h[4] = c * e * (e * e - 3.0 * f * f) + d * f * (3.0 * e * e - f * f);
    h[5] = b * (e * e - f * f) + 4.0 * nu.nu11 * e * f;
    h[6] = d * e * (e * e - 3.0 * f * f) - c * f * (3.0 * e * e - f * f);
    return h;
}

MomentSet compute_moments(const Contour& c) {
    MomentSet set;
    set.spatial = spatial_moments(c);
    set.central = central_moments(set.spatial);
    set.normalized = normalized_moments(set.central, set.spatial.m00);
    set.hu = hu_moments(set.normalized);
    return set;
}

FeatureVector mc_features(const BinaryMask& mask, const ImageBuffer& gray, bool binary_intensity) {
    const auto contours = binary_intensity ? extract_contours(mask) : extract_contours(mask, gray);
    if (contours.empty()) throw InvalidInputError("mc_features: mask has no foreground component");

    // Largest contour by point count; ties break to the earlier (topmost-
    // leftmost) starting point, which is the discovery order.
    const Contour* best = &contours[0];
    for (const auto& c : contours) {
        if (c.points.size() > best->points.size()) best = &c;
    }

    const MomentSet set = compute_moments(*best);
    FeatureVector fv;
    fv.method = Method::kMc;
    const auto flat = set.flatten();
    fv.values.assign(flat.begin(), flat.end());
    return fv;
}

}  // namespace armload
