#pragma once

#include <vector>

#include "cmfd/image.hpp"
#include "cmfd/match.hpp"
#include "cmfd/moments.hpp"

namespace cmfd {

struct BlockFeature {
    int x = 0;       // top-left pixel
    int y = 0;
    int size = 0;    // block side in pixels
    HuVector feature{};
    bool valid = false;  // false for zero-mass (all-black) blocks
};

/// All block positions (x, y) with x, y multiples of stride and the block
/// fully inside the image, in row-major order.
std::vector<BlockFeature> tile(const GrayImage& img, int block_size, int stride);

/// Fills each block's Hu feature. Zero-mass blocks stay invalid and are
/// excluded from matching.
void extract_block_features(const GrayImage& img, std::vector<BlockFeature>& blocks);

/// Lexicographic-sort matching over quantized, standardized Hu features.
/// Each feature is compared against the next `window` rows of the sorted
/// table; pairs within dist_threshold (Euclidean, in standardized units)
/// and with spatial shift magnitude >= min_shift are returned, each
/// unordered pair once, src = lexicographically smaller coordinate.
std::vector<MatchPair> lex_match(const std::vector<BlockFeature>& features,
                                 double quant_factor, int window, double min_shift,
                                 double dist_threshold);

}  // namespace cmfd
