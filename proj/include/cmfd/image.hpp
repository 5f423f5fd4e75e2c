#pragma once

#include <cstdint>
#include <vector>

#include "cmfd/types.hpp"

namespace cmfd {

/// Single-channel luminance raster, values in [0,1], row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    float at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    float& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

GrayImage make_image(int width, int height, float fill = 0.0f);

/// True when dimensions are positive, data length matches, and every value
/// is finite and within [0,1].
bool is_valid(const GrayImage& img);

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // 0 or 1 per pixel, row-major

    bool get(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

BinaryMask make_mask(int width, int height);
std::size_t count_set(const BinaryMask& mask);
bool any_set(const BinaryMask& mask);

/// BT.601 luma. Written so that equal channels reproduce their value exactly.
inline double to_grayscale(double r, double g, double b) {
    return b + 0.587 * (g - b) + 0.299 * (r - b);
}

/// Bilinear resize with half-pixel centers and edge-clamped sampling.
GrayImage resize(const GrayImage& img, int new_w, int new_h);

// Square structuring element of side 2*radius+1; radius 0 is the identity.
BinaryMask dilate(const BinaryMask& mask, int radius);
BinaryMask erode(const BinaryMask& mask, int radius);

/// Clears 8-connected components with fewer than min_area set pixels.
void remove_small_components(BinaryMask& mask, int min_area);

}  // namespace cmfd
