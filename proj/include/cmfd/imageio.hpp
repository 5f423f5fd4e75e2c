#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmfd/image.hpp"

namespace cmfd {

/// Decodes a PNG or JPEG file (sniffed by magic bytes, not extension) and
/// converts to grayscale. Throws std::runtime_error on unreadable files or
/// corrupt/unsupported formats.
GrayImage load_image(const std::string& path);

/// 8-bit single-channel PNG.
void save_gray_png(const GrayImage& img, const std::string& path);

/// 8-bit single-channel PNG, 255 = set (tampered), 0 = clear.
void save_mask_png(const BinaryMask& mask, const std::string& path);

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // 3 bytes per pixel, row-major
};

void save_rgb_png(const RgbImage& img, const std::string& path);

}  // namespace cmfd
