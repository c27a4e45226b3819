#include "tactfuse/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "tactfuse/errors.hpp"

namespace tactfuse {

namespace {

// (|dx|+|dy|, dy, dx) — the displacement preference order among equal scores.
std::tuple<int, int, int> tie_rank(int dx, int dy) {
  return {std::abs(dx) + std::abs(dy), dy, dx};
}

}  // namespace

Shift estimate_shift(const GrayImage& reference, const GrayImage& moving,
                     double template_frac, int max_shift) {
  if (!reference.same_size(moving)) {
    throw PreconditionError("estimate_shift: image dimensions differ");
  }
  if (!(template_frac > 0.0 && template_frac <= 1.0)) {
    throw PreconditionError("estimate_shift: template_frac must be in (0, 1]");
  }
  if (max_shift < 0) {
    throw PreconditionError("estimate_shift: max_shift must be >= 0");
  }

  const int rows = reference.rows(), cols = reference.cols();
  const int side = static_cast<int>(
      std::floor(template_frac * std::min(rows, cols)));
  if (side < 8) {
    throw PreconditionError(
        "estimate_shift: images too small (template under 8 px)");
  }
  const int tx0 = (cols - side) / 2;
  const int ty0 = (rows - side) / 2;
  if (tx0 - max_shift < 0 || ty0 - max_shift < 0 ||
      tx0 + side + max_shift > cols || ty0 + side + max_shift > rows) {
    throw PreconditionError(
        "estimate_shift: template plus search radius exceeds the reference");
  }

  // Zero-mean template; with sum(Tz) == 0 the ZNCC numerator reduces to
  // sum(Tz * window).
  const std::size_t n = static_cast<std::size_t>(side) * side;
  std::vector<double> tz(n);
  double tmean = 0.0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      tmean += moving(ty0 + i, tx0 + j);
    }
  }
  tmean /= static_cast<double>(n);
  double tvar = 0.0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double z = moving(ty0 + i, tx0 + j) - tmean;
      tz[static_cast<std::size_t>(i) * side + j] = z;
      tvar += z * z;
    }
  }

  // Prefix sums of the reference and its square give each window's mean and
  // variance in O(1).
  const int prows = rows + 1, pcols = cols + 1;
  std::vector<double> sum1(static_cast<std::size_t>(prows) * pcols, 0.0);
  std::vector<double> sum2(static_cast<std::size_t>(prows) * pcols, 0.0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double v = reference(r, c);
      const std::size_t idx = static_cast<std::size_t>(r + 1) * pcols + c + 1;
      sum1[idx] = v + sum1[idx - 1] + sum1[idx - pcols] - sum1[idx - pcols - 1];
      sum2[idx] =
          v * v + sum2[idx - 1] + sum2[idx - pcols] - sum2[idx - pcols - 1];
    }
  }
  const auto window_sums = [&](int y0, int x0, double& s, double& ss) {
    const std::size_t a = static_cast<std::size_t>(y0) * pcols + x0;
    const std::size_t b = static_cast<std::size_t>(y0 + side) * pcols + x0;
    s = sum1[b + side] - sum1[b] - sum1[a + side] + sum1[a];
    ss = sum2[b + side] - sum2[b] - sum2[a + side] + sum2[a];
  };

  const double eps = 1e-12 * static_cast<double>(n);
  const double tnorm = std::sqrt(std::max(tvar, 0.0));

  Shift best{0, 0, -2.0};
  auto best_rank = tie_rank(0, 0);
  bool have_best = false;

  for (int dy = -max_shift; dy <= max_shift; ++dy) {
    for (int dx = -max_shift; dx <= max_shift; ++dx) {
      const int y0 = ty0 + dy, x0 = tx0 + dx;
      double score = 0.0;
      double wsum = 0.0, wss = 0.0;
      window_sums(y0, x0, wsum, wss);
      const double wvar = wss - wsum * wsum / static_cast<double>(n);
      if (tvar > eps && wvar > eps) {
        double cross = 0.0;
        for (int i = 0; i < side; ++i) {
          const double* trow = tz.data() + static_cast<std::size_t>(i) * side;
          const double* rrow =
              reference.data() + static_cast<std::size_t>(y0 + i) * cols + x0;
          for (int j = 0; j < side; ++j) {
            cross += trow[j] * rrow[j];
          }
        }
        score = std::clamp(cross / (tnorm * std::sqrt(wvar)), -1.0, 1.0);
      }
      const auto rank = tie_rank(dx, dy);
      if (!have_best || score > best.score ||
          (score == best.score && rank < best_rank)) {
        best = Shift{dx, dy, score};
        best_rank = rank;
        have_best = true;
      }
    }
  }
  return best;
}

GrayImage apply_shift(const GrayImage& image, const Shift& shift) {
  const int rows = image.rows(), cols = image.cols();
  GrayImage out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const int sr = std::clamp(r - shift.dy, 0, rows - 1);
    for (int c = 0; c < cols; ++c) {
      out(r, c) = image(sr, std::clamp(c - shift.dx, 0, cols - 1));
    }
  }
  return out;
}

}  // namespace tactfuse
