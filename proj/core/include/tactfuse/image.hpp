#pragma once

#include <filesystem>

#include "tactfuse/matrix.hpp"

namespace tactfuse {

// A grayscale raster is a Matrix whose values are nominally in [0, 255];
// row = y, column = x. Intensities stay real-valued through the pipeline and
// are quantized only when a file is written.
using GrayImage = Matrix;

// Reads a binary PGM (magic "P5", maxval 255); bytes map one-to-one onto
// intensities. Throws PgmError with a distinct fault for a missing file,
// malformed header, unsupported maxval, or truncated payload.
GrayImage read_pgm(const std::filesystem::path& path);

// Writes the canonical form "P5\n<width> <height>\n255\n" followed by raw
// bytes. Values are rounded half-away-from-zero and clamped to [0, 255].
void write_pgm(const GrayImage& image, const std::filesystem::path& path);

// Linear min-max stretch onto [0, 255]. A constant input maps to mid-gray
// 128 so the degenerate case stays visible. Throws PreconditionError for an
// empty or non-finite input.
GrayImage remap_to_gray(const Matrix& data);

// Clamps every value into [0, 255]; the no-remap alternative at the end of a
// fusion run.
GrayImage clip_to_gray(const Matrix& data);

}  // namespace tactfuse
