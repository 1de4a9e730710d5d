#pragma once

#include <filesystem>

#include "openspace/raster.hpp"

namespace openspace {

// PNG (8-bit gray / RGB, other PNG layouts are normalised on load) and the
// plain-text PGM (P2) / PPM (P3) formats. The writer picks the format from
// the file extension: .png, .pgm or .ppm.

/// Gray images are expanded to (v, v, v).
ColorRaster load_color(const std::filesystem::path& path);
/// Color images are converted with to_gray.
GrayRaster load_gray(const std::filesystem::path& path);

void save_color(const ColorRaster& img, const std::filesystem::path& path);
void save_gray(const GrayRaster& img, const std::filesystem::path& path);

/// Loads a mask image; any non-zero gray value is a set bit.
BinaryMask load_mask(const std::filesystem::path& path);
/// Writes set bits as 255, clear bits as 0.
void save_mask(const BinaryMask& mask, const std::filesystem::path& path);

}  // namespace openspace
