#pragma once

#include "cmfd/types.hpp"

namespace cmfd {

enum class MatchSource { block, keypoint };

/// A pair of image locations with matching features. src is the
/// lexicographically smaller coordinate (x, then y); shift = dst - src.
struct MatchPair {
    Vec2 src;
    Vec2 dst;
    Vec2 shift;
    double dist = 0.0;
    MatchSource kind = MatchSource::block;
    // Mask paint footprint: block side length for block pairs, disk radius
    // for keypoint pairs.
    double extent = 0.0;
};

}  // namespace cmfd
