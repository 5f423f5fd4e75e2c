#pragma once

#include <array>

#include "cmfd/image.hpp"
#include "cmfd/types.hpp"

namespace cmfd {

/// Raw, central, and normalized central moments of an image region, up to
/// order three. Coordinates are region-local (origin at the region top-left)
/// so identical patches at different image positions produce identical sets.
struct MomentSet {
    // raw moments m_pq = sum x^p y^q f(x,y)
    double m00 = 0, m10 = 0, m01 = 0;
    double m20 = 0, m11 = 0, m02 = 0;
    double m30 = 0, m21 = 0, m12 = 0, m03 = 0;

    // central moments about the centroid; mu10 = mu01 = 0 by construction
    double mu00 = 0;
    double mu20 = 0, mu11 = 0, mu02 = 0;
    double mu30 = 0, mu21 = 0, mu12 = 0, mu03 = 0;

    // normalized central moments eta_pq = mu_pq / mu00^(1 + (p+q)/2)
    double eta20 = 0, eta11 = 0, eta02 = 0;
    double eta30 = 0, eta21 = 0, eta12 = 0, eta03 = 0;
};

/// The seven Hu invariants.
struct HuVector {
    std::array<double, 7> v{};

    double operator[](int i) const { return v[i]; }
    double& operator[](int i) { return v[i]; }
};

/// Fills the raw-moment fields by direct double summation over the region.
/// Throws std::invalid_argument when the region leaves the image or is empty.
MomentSet raw_moments(const GrayImage& img, const Rect& region);

/// Fills the central and normalized fields from the raw ones.
/// Throws std::invalid_argument when m00 == 0 (zero-mass region).
MomentSet central_normalized(MomentSet ms);

/// Hu invariants I1..I7 from the eta fields. No normalization or
/// log-compression is applied.
HuVector hu_invariants(const MomentSet& ms);

}  // namespace cmfd
