#pragma once

#include <cstddef>
#include <vector>

#include "cmfd/config.hpp"
#include "cmfd/image.hpp"
#include "cmfd/match.hpp"

namespace cmfd {

/// A consensus group of match pairs sharing (within tolerance) one shift
/// vector. Reflected shifts are canonicalized before grouping.
struct ShiftCluster {
    Vec2 shift;                      // representative (running member mean)
    std::vector<MatchPair> members;
    int block_support = 0;
    int keypoint_support = 0;

    int support() const { return block_support + keypoint_support; }
};

struct DetectionResult {
    BinaryMask mask;
    bool tampered = false;
    std::vector<ShiftCluster> clusters;  // accepted clusters only
    std::size_t pairs_examined = 0;
};

/// Greedy shift-vector clustering with L-inf tolerance. Clusters come back
/// sorted by descending support; ties break toward smaller shift magnitude,
/// then lexicographic shift.
std::vector<ShiftCluster> cluster_shifts(const std::vector<MatchPair>& pairs,
                                         double tolerance);

/// Keeps pairs whose patch neighborhoods correlate (ZNCC >= min_corr).
/// Zero-variance neighborhoods survive only as equal flat-on-flat pairs.
std::vector<MatchPair> intensity_filter(const std::vector<MatchPair>& pairs,
                                        const GrayImage& img, int patch,
                                        double min_corr);

/// Paints one pair's footprint (block square or keypoint disk) at both
/// endpoints. A pixel is painted only when its shifted partner is also in
/// bounds, so source and destination paint equal pixel counts.
void paint_pair(BinaryMask& src_side, BinaryMask& dst_side, const MatchPair& pair);

/// Filter both evidence sets, cluster the union, accept clusters by per-arm
/// and cross-arm support, paint + close + drop small components.
DetectionResult fuse_and_mask(const std::vector<MatchPair>& block_pairs,
                              const std::vector<MatchPair>& keypoint_pairs,
                              const GrayImage& img, const DetectorConfig& cfg);

/// The full pipeline on a grayscale image. Throws std::invalid_argument for
/// images smaller than 32x32. Deterministic for fixed cfg.
DetectionResult detect(const GrayImage& img, const DetectorConfig& cfg,
                       Arm arm = Arm::hybrid);

}  // namespace cmfd
