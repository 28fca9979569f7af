#pragma once

#include <filesystem>

#include "featbench/image.hpp"

namespace featbench {

/// Loads a binary PGM (P5) or PPM (P6) file with maxval <= 255.
/// Color images are converted to grayscale with the Rec. 601 luma weights
/// 0.299 R + 0.587 G + 0.114 B, rounded to the nearest integer.
/// Throws IoError on missing files, truncated data, or unsupported formats.
Image load_image(const std::filesystem::path& path);

/// Writes a binary PGM (P5) file. Throws IoError if the file cannot be written.
void save_pgm(const Image& img, const std::filesystem::path& path);

} // namespace featbench
