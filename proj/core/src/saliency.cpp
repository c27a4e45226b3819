#include "tactfuse/saliency.hpp"

#include <algorithm>
#include <cmath>

#include "tactfuse/errors.hpp"

namespace tactfuse {

Matrix saliency_map(const GrayImage& image) {
  const int rows = image.rows(), cols = image.cols();
  if (rows < 3 || cols < 3) {
    throw PreconditionError("saliency_map: image must be at least 3x3");
  }

  Matrix out(rows, cols);
  double peak = 0.0;
  for (int r = 0; r < rows; ++r) {
    const int up = std::max(r - 1, 0), down = std::min(r + 1, rows - 1);
    for (int c = 0; c < cols; ++c) {
      const int left = std::max(c - 1, 0), right = std::min(c + 1, cols - 1);
      const double lap = image(up, c) + image(down, c) + image(r, left) +
                         image(r, right) - 4.0 * image(r, c);
      const double mag = std::abs(lap);
      out(r, c) = mag;
      peak = std::max(peak, mag);
    }
  }

  if (peak == 0.0) return out;  // flat image: all zeros
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Divide first: (mag/peak) <= 1 exactly, so the scaled value never
    // rounds above 255.
    out.data()[i] = (out.data()[i] / peak) * 255.0;
  }
  return out;
}

Matrix adjust_saliency(const Matrix& saliency) {
  Matrix out(saliency.rows(), saliency.cols());
  for (std::size_t i = 0; i < saliency.size(); ++i) {
    const double s = saliency.data()[i];
    if (!(s >= 0.0 && s <= 255.0)) {
      throw PreconditionError("adjust_saliency: value outside [0, 255]");
    }
    out.data()[i] = std::expm1(s / 255.0);
  }
  return out;
}

SaliencyWeights fusion_weights(const Matrix& s1, const Matrix& s2) {
  if (!s1.same_size(s2)) {
    throw PreconditionError("fusion_weights: dimensions differ");
  }
  if (s1.rows() < 2 || s1.cols() < 2 || s1.rows() % 2 != 0 ||
      s1.cols() % 2 != 0) {
    throw PreconditionError("fusion_weights: dimensions must be even");
  }
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (s1.data()[i] < 0.0 || s2.data()[i] < 0.0) {
      throw PreconditionError("fusion_weights: negative saliency");
    }
  }

  const int half_rows = s1.rows() / 2, half_cols = s1.cols() / 2;
  SaliencyWeights weights;
  weights.w1 = Matrix(half_rows, half_cols);
  weights.w2 = Matrix(half_rows, half_cols);
  for (int r = 0; r < half_rows; ++r) {
    for (int c = 0; c < half_cols; ++c) {
      const auto pool = [&](const Matrix& m) {
        return 0.25 * (m(2 * r, 2 * c) + m(2 * r, 2 * c + 1) +
                       m(2 * r + 1, 2 * c) + m(2 * r + 1, 2 * c + 1));
      };
      const double p1 = pool(s1), p2 = pool(s2);
      const double total = p1 + p2;
      const double w1 = (total == 0.0) ? 0.5 : p1 / total;
      weights.w1(r, c) = w1;
      weights.w2(r, c) = 1.0 - w1;
    }
  }
  return weights;
}

}  // namespace tactfuse
