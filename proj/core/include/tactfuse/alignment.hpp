#pragma once

#include "tactfuse/image.hpp"

namespace tactfuse {

// Integer translation that aligns a moving frame onto a reference, plus the
// normalized cross-correlation score at that displacement.
struct Shift {
  int dx = 0;
  int dy = 0;
  double score = 0.0;
};

// Exhaustive zero-normalized cross-correlation of a central template crop of
// `moving` (side = template_frac * min dimension, rounded down, at least
// 8 px) against `reference` over every integer displacement within
// +/-max_shift. Returns the translation to apply to `moving` so its content
// lands on `reference`. Ties break toward the smallest |dx|+|dy|, then
// smallest dy, then smallest dx; a zero-variance template or window scores 0
// at that displacement. Throws PreconditionError when the images differ in
// size, the template would be under 8 px, or template plus search radius do
// not fit inside the reference.
Shift estimate_shift(const GrayImage& reference, const GrayImage& moving,
                     double template_frac, int max_shift);

// Integer translation with replicate-edge fill for exposed pixels; output
// has the same dimensions.
GrayImage apply_shift(const GrayImage& image, const Shift& shift);

}  // namespace tactfuse
