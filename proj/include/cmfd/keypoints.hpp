#pragma once

#include <array>
#include <vector>

#include "cmfd/image.hpp"
#include "cmfd/match.hpp"

namespace cmfd {

struct Keypoint {
    double x = 0, y = 0;      // sub-pixel base-image coordinates
    double sigma = 0;         // detection scale in base-image pixels
    double orientation = 0;   // radians, [0, 2*pi)
    std::array<float, 128> descriptor{};

    // detection anchors consumed by describe()
    int octave = 0;
    int level = 0;            // Gaussian level index used for gradients
    double xo = 0, yo = 0;    // octave-local coordinates
    double sigma_oct = 0;     // octave-local scale
};

/// Gaussian / difference-of-Gaussian pyramid. Per octave there are
/// scales_per_octave + 3 Gaussian levels at sigma0 * 2^(s/scales_per_octave)
/// and one fewer DoG levels; octave dimensions halve (floor) per octave.
struct ScaleSpace {
    struct Octave {
        std::vector<GrayImage> gauss;
        std::vector<GrayImage> dog;
        int width = 0, height = 0;
    };
    std::vector<Octave> octaves;
    int scales_per_octave = 3;
    double sigma0 = 1.6;
};

/// Throws std::invalid_argument for images smaller than 16x16. Octaves are
/// clamped so no octave falls below 8 pixels on a side.
ScaleSpace build_scale_space(const GrayImage& img, int octaves, int scales_per_octave,
                             double sigma0);

/// 3-D DoG extrema with quadratic sub-pixel refinement, contrast and
/// edge-response filtering. Positions and sigmas only.
std::vector<Keypoint> detect_keypoints(const ScaleSpace& ss, double contrast_threshold,
                                       double edge_ratio);

/// Assigns orientations (extra keypoints for secondary histogram peaks) and
/// computes 128-bin gradient descriptors. Keypoints whose sampling window
/// would leave the octave image are dropped.
std::vector<Keypoint> describe(const ScaleSpace& ss, const std::vector<Keypoint>& kps);

/// Intra-image descriptor matching: exact kd-tree 2-NN with spatial
/// exclusion inside min_shift, Lowe ratio test d1/d2 < ratio.
std::vector<MatchPair> match_keypoints(const std::vector<Keypoint>& kps, double ratio,
                                       double min_shift);

/// Octave count detect() uses for a given image size.
int default_octaves(int width, int height, int max_octaves);

}  // namespace cmfd
