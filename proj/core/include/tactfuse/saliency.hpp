#pragma once

#include "tactfuse/image.hpp"

namespace tactfuse {

// Per-pixel fusion weight pair at subband resolution (half the image
// dimensions). Invariant: w1 + w2 == 1 elementwise, both within [0, 1].
struct SaliencyWeights {
  Matrix w1, w2;
};

// Absolute Laplacian response (4-neighbour stencil [[0,1,0],[1,-4,1],[0,1,0]],
// replicate borders), normalized by the global maximum and scaled to
// [0, 255]. A perfectly flat image maps to all zeros. Requires at least 3x3.
Matrix saliency_map(const GrayImage& image);

// exp(s/255) - 1 elementwise, spreading the salient range; input must lie in
// [0, 255], output lies in [0, e-1].
Matrix adjust_saliency(const Matrix& saliency);

// Pools both adjusted saliency maps to subband resolution by non-overlapping
// 2x2 averaging, then w1 = s1/(s1+s2) with the 0/0 case resolved to 0.5/0.5.
// Inputs are full-resolution maps of equal even dimensions with nonnegative
// values.
SaliencyWeights fusion_weights(const Matrix& s1, const Matrix& s2);

}  // namespace tactfuse
