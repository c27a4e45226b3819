#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tactfuse/image.hpp"

namespace tactfuse {

struct MetricsReport {
  double ie = 0.0;                 // bits, in [0, 8]
  std::optional<double> ms_ssim;   // in [0, 1] when a reference was supplied
  std::string image_path;
  std::string reference_path;
};

// Shannon entropy in bits of the 256-bin histogram, intensities rounded
// half-away-from-zero to integers first. 0 for a constant image, 8 for a
// perfectly uniform histogram.
double information_entropy(const GrayImage& image);

// Mean SSIM terms of one scale: 11x11 Gaussian window with sigma 1.5,
// K1 = 0.01, K2 = 0.03, dynamic range L = 255, statistics over the valid
// (fully covered) region.
struct SsimScaleStats {
  double luminance = 0.0;           // mean of (2*mx*my + C1)/(mx^2 + my^2 + C1)
  double contrast_structure = 0.0;  // mean of (2*sxy + C2)/(sx^2 + sy^2 + C2)
  double full = 0.0;                // mean of the per-pixel product
};
SsimScaleStats ssim_scale_stats(const GrayImage& a, const GrayImage& b);

// Five-scale MS-SSIM, scale weights (0.0448, 0.2856, 0.3001, 0.2363, 0.1333),
// 2x2 average pooling between scales, luminance applied at the coarsest scale
// only. When the 11-px window stops fitting after halvings the scale count
// shrinks and the weights are renormalized. Result clamped to [0, 1].
double ms_ssim(const GrayImage& image, const GrayImage& reference);

// Nearest-neighbour resize; used to bring a reference image onto the
// evaluated image's dimensions without inventing new gray levels.
GrayImage resize_nearest(const GrayImage& image, int rows, int cols);

struct MethodComparison {
  MetricsReport fused;
  std::vector<MetricsReport> singles;
  double ie_ratio = 1.0;  // IE(fused) / max single IE; 1.0 when that max is 0
};

// Evaluates the fused image and every single frame against the reference.
// The reference is first resized to the fused dimensions and every image is
// then remapped to [0, 255] so gray mappings are comparable.
MethodComparison compare_methods(const GrayImage& fused,
                                 const std::vector<GrayImage>& singles,
                                 const GrayImage& reference);

}  // namespace tactfuse
