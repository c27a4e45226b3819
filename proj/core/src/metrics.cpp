#include "tactfuse/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tactfuse/errors.hpp"

namespace tactfuse {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
constexpr int kMaxScales = 5;
constexpr std::array<double, kMaxScales> kScaleWeights = {
    0.0448, 0.2856, 0.3001, 0.2363, 0.1333};

const std::array<double, kWindow>& gaussian_window() {
  static const std::array<double, kWindow> window = [] {
    std::array<double, kWindow> w{};
    double total = 0.0;
    for (int i = 0; i < kWindow; ++i) {
      const double d = i - (kWindow - 1) / 2.0;
      w[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
      total += w[i];
    }
    for (double& v : w) v /= total;
    return w;
  }();
  return window;
}

// Separable valid-region Gaussian blur: output is (rows-10) x (cols-10).
Matrix blur_valid(const Matrix& m) {
  const auto& w = gaussian_window();
  const int rows = m.rows(), cols = m.cols();
  const int out_cols = cols - kWindow + 1;
  Matrix horizontal(rows, out_cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < out_cols; ++c) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) acc += w[k] * m(r, c + k);
      horizontal(r, c) = acc;
    }
  }
  const int out_rows = rows - kWindow + 1;
  Matrix out(out_rows, out_cols);
  for (int r = 0; r < out_rows; ++r) {
    for (int c = 0; c < out_cols; ++c) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) acc += w[k] * horizontal(r + k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix elementwise_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.data()[i] = a.data()[i] * b.data()[i];
  }
  return out;
}

// 2x2 average pooling; an odd trailing row/column is dropped.
Matrix downsample2(const Matrix& m) {
  const int rows = m.rows() / 2, cols = m.cols() / 2;
  Matrix out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      out(r, c) = 0.25 * (m(2 * r, 2 * c) + m(2 * r, 2 * c + 1) +
                          m(2 * r + 1, 2 * c) + m(2 * r + 1, 2 * c + 1));
    }
  }
  return out;
}

int usable_scales(int rows, int cols) {
  int scales = 0;
  while (scales < kMaxScales && std::min(rows, cols) >= kWindow) {
    ++scales;
    rows /= 2;
    cols /= 2;
  }
  return scales;
}

}  // namespace

double information_entropy(const GrayImage& image) {
  if (image.empty()) {
    throw PreconditionError("information_entropy: empty image");
  }
  std::array<std::size_t, 256> histogram{};
  for (std::size_t i = 0; i < image.size(); ++i) {
    const long long q = std::llround(image.data()[i]);
    histogram[static_cast<std::size_t>(std::clamp<long long>(q, 0, 255))]++;
  }
  const double total = static_cast<double>(image.size());
  double entropy = 0.0;
  for (const std::size_t count : histogram) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / total;
    entropy -= p * std::log2(p);
  }
  return entropy;
}

SsimScaleStats ssim_scale_stats(const GrayImage& a, const GrayImage& b) {
  if (!a.same_size(b)) {
    throw PreconditionError("ssim: image dimensions differ");
  }
  if (std::min(a.rows(), a.cols()) < kWindow) {
    throw PreconditionError("ssim: image smaller than the 11x11 window");
  }

  const Matrix mu_a = blur_valid(a);
  const Matrix mu_b = blur_valid(b);
  const Matrix raw_aa = blur_valid(elementwise_product(a, a));
  const Matrix raw_bb = blur_valid(elementwise_product(b, b));
  const Matrix raw_ab = blur_valid(elementwise_product(a, b));

  SsimScaleStats stats;
  double lum_total = 0.0, cs_total = 0.0, full_total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a.data()[i], mb = mu_b.data()[i];
    const double var_a = raw_aa.data()[i] - ma * ma;
    const double var_b = raw_bb.data()[i] - mb * mb;
    const double cov = raw_ab.data()[i] - ma * mb;
    const double lum = (2.0 * ma * mb + kC1) / (ma * ma + mb * mb + kC1);
    const double cs = (2.0 * cov + kC2) / (var_a + var_b + kC2);
    lum_total += lum;
    cs_total += cs;
    full_total += lum * cs;
  }
  const double n = static_cast<double>(mu_a.size());
  stats.luminance = lum_total / n;
  stats.contrast_structure = cs_total / n;
  stats.full = full_total / n;
  return stats;
}

double ms_ssim(const GrayImage& image, const GrayImage& reference) {
  if (!image.same_size(reference)) {
    throw PreconditionError("ms_ssim: image dimensions differ");
  }
  const int scales = usable_scales(image.rows(), image.cols());
  if (scales == 0) {
    throw PreconditionError("ms_ssim: image smaller than the 11x11 window");
  }
  double weight_total = 0.0;
  for (int s = 0; s < scales; ++s) weight_total += kScaleWeights[s];

  Matrix a = image, b = reference;
  double result = 1.0;
  for (int s = 0; s < scales; ++s) {
    const SsimScaleStats stats = ssim_scale_stats(a, b);
    const double weight = kScaleWeights[s] / weight_total;
    // Anti-correlated structure can push a scale mean below zero; clamp so
    // the fractional power stays real.
    const double term = (s == scales - 1) ? std::max(stats.full, 0.0)
                                          : std::max(stats.contrast_structure,
                                                     0.0);
    result *= std::pow(term, weight);
    if (s + 1 < scales) {
      a = downsample2(a);
      b = downsample2(b);
    }
  }
  return std::clamp(result, 0.0, 1.0);
}

GrayImage resize_nearest(const GrayImage& image, int rows, int cols) {
  if (image.empty() || rows < 1 || cols < 1) {
    throw PreconditionError("resize_nearest: empty image or bad target size");
  }
  GrayImage out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const int sr = std::min(
        static_cast<int>((r + 0.5) * image.rows() / rows), image.rows() - 1);
    for (int c = 0; c < cols; ++c) {
      const int sc = std::min(
          static_cast<int>((c + 0.5) * image.cols() / cols), image.cols() - 1);
      out(r, c) = image(sr, sc);
    }
  }
  return out;
}

MethodComparison compare_methods(const GrayImage& fused,
                                 const std::vector<GrayImage>& singles,
                                 const GrayImage& reference) {
  if (singles.empty()) {
    throw PreconditionError("compare_methods: empty singles list");
  }
  for (const auto& single : singles) {
    if (!single.same_size(fused)) {
      throw PreconditionError(
          "compare_methods: single frame dimensions differ from fused");
    }
  }

  // Uniform gray normalization before any metric so mappings are comparable.
  const GrayImage ref =
      remap_to_gray(resize_nearest(reference, fused.rows(), fused.cols()));
  const GrayImage fused_n = remap_to_gray(fused);

  MethodComparison comparison;
  comparison.fused.ie = information_entropy(fused_n);
  comparison.fused.ms_ssim = ms_ssim(fused_n, ref);
  comparison.fused.image_path = "fused";
  comparison.fused.reference_path = "reference";

  double max_single_ie = 0.0;
  for (std::size_t i = 0; i < singles.size(); ++i) {
    const GrayImage single_n = remap_to_gray(singles[i]);
    MetricsReport report;
    report.ie = information_entropy(single_n);
    report.ms_ssim = ms_ssim(single_n, ref);
    report.image_path = "single_" + std::to_string(i);
    report.reference_path = "reference";
    max_single_ie = std::max(max_single_ie, report.ie);
    comparison.singles.push_back(std::move(report));
  }
  comparison.ie_ratio =
      (max_single_ie == 0.0) ? 1.0 : comparison.fused.ie / max_single_ie;
  return comparison;
}

}  // namespace tactfuse
