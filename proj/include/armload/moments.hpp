#pragma once

#include <array>

#include "armload/contour.hpp"
#include "armload/features.hpp"
#include "armload/image.hpp"

namespace armload {

// m_pq = sum over contour pixels of I(x,y) * x^p * y^q.
struct SpatialMoments {
    double m00 = 0, m10 = 0, m01 = 0;
    double m20 = 0, m11 = 0, m02 = 0;
    double m30 = 0, m21 = 0, m12 = 0, m03 = 0;
};

struct CentralMoments {
    double mu20 = 0, mu11 = 0, mu02 = 0;
    double mu30 = 0, mu21 = 0, mu12 = 0, mu03 = 0;
};

struct NormalizedMoments {
    double nu20 = 0, nu11 = 0, nu02 = 0;
    double nu30 = 0, nu21 = 0, nu12 = 0, nu03 = 0;
};

using HuMoments = std::array<double, 7>;

struct MomentSet {
    SpatialMoments spatial;
    CentralMoments central;
    NormalizedMoments normalized;
    HuMoments hu{};

    // spatial(10) || central(7) || normalized(7) || hu(7)
    std::array<double, 31> flatten() const;
};

SpatialMoments spatial_moments(const Contour& c);

// Central moments from the spatial ones via the standard expansion about the
// centroid (x_bar = m10/m00, y_bar = m01/m00).
CentralMoments central_moments(const SpatialMoments& m);

// nu_pq = mu_pq / m00^(1 + (p+q)/2)
NormalizedMoments normalized_moments(const CentralMoments& mu, double m00);

// The seven classical invariant combinations.
HuMoments hu_moments(const NormalizedMoments& nu);

MomentSet compute_moments(const Contour& c);

// 31-entry feature vector from the largest contour of the mask (ties broken by
// topmost-leftmost starting point). With binary_intensity the boundary weights
// are 1 instead of the grayscale values.
FeatureVector mc_features(const BinaryMask& mask, const ImageBuffer& gray, bool binary_intensity = false);

}  // namespace armload
