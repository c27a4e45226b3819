#include "tactfuse/wavelet.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tactfuse/errors.hpp"

namespace tactfuse {

namespace {

struct FilterBank {
  std::vector<double> lo;  // scaling (lowpass) filter, sum = sqrt(2)
  std::vector<double> hi;  // wavelet (highpass) QMF: hi[k] = (-1)^k lo[L-1-k]
};

std::vector<double> lowpass_taps(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::Db1:
      return {0.70710678118654752440, 0.70710678118654752440};
    case WaveletFamily::Db2: {
      // Closed form (1 +- sqrt(3)) / (4 sqrt(2)) keeps the bank orthonormal
      // to machine precision.
      const double s2 = std::sqrt(2.0);
      const double s3 = std::sqrt(3.0);
      return {(1.0 + s3) / (4.0 * s2), (3.0 + s3) / (4.0 * s2),
              (3.0 - s3) / (4.0 * s2), (1.0 - s3) / (4.0 * s2)};
    }
    case WaveletFamily::Db4:
      // Standard 8-tap Daubechies scaling coefficients, 17 significant digits.
      return {0.23037781330885523,   0.71484657055254153,
              0.63088076792959036,   -0.027983769416983849,
              -0.18703481171888114,  0.030841381835986965,
              0.032883011666982945,  -0.010597401784997278};
  }
  throw std::logic_error("unknown wavelet family");
}

void verify_orthonormal(const FilterBank& bank) {
  const auto& h = bank.lo;
  const int taps = static_cast<int>(h.size());
  // sum h[k] h[k+2m] must be 1 for m == 0 and 0 otherwise.
  for (int m = 0; 2 * m < taps; ++m) {
    double acc = 0.0;
    for (int k = 0; k + 2 * m < taps; ++k) acc += h[k] * h[k + 2 * m];
    const double want = (m == 0) ? 1.0 : 0.0;
    if (std::abs(acc - want) > 1e-12) {
      throw std::logic_error("wavelet filter bank failed orthonormality");
    }
  }
}

FilterBank make_bank(WaveletFamily family) {
  FilterBank bank;
  bank.lo = lowpass_taps(family);
  const std::size_t taps = bank.lo.size();
  bank.hi.resize(taps);
  for (std::size_t k = 0; k < taps; ++k) {
    bank.hi[k] = ((k % 2 == 0) ? 1.0 : -1.0) * bank.lo[taps - 1 - k];
  }
  verify_orthonormal(bank);
  return bank;
}

const FilterBank& bank_for(WaveletFamily family) {
  static const std::array<FilterBank, 3> banks = {
      make_bank(WaveletFamily::Db1), make_bank(WaveletFamily::Db2),
      make_bank(WaveletFamily::Db4)};
  return banks[static_cast<std::size_t>(family)];
}

// One analysis pass along every row: out pair is rows x cols/2.
void analyze_rows(const Matrix& src, const FilterBank& bank, Matrix& lo,
                  Matrix& hi) {
  const int rows = src.rows(), cols = src.cols(), half = cols / 2;
  const int taps = static_cast<int>(bank.lo.size());
  lo = Matrix(rows, half);
  hi = Matrix(rows, half);
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < half; ++i) {
      double a = 0.0, d = 0.0;
      for (int k = 0; k < taps; ++k) {
        const double x = src(r, (2 * i + k) % cols);
        a += bank.lo[k] * x;
        d += bank.hi[k] * x;
      }
      lo(r, i) = a;
      hi(r, i) = d;
    }
  }
}

// One analysis pass down every column: out pair is rows/2 x cols.
void analyze_cols(const Matrix& src, const FilterBank& bank, Matrix& lo,
                  Matrix& hi) {
  const int rows = src.rows(), cols = src.cols(), half = rows / 2;
  const int taps = static_cast<int>(bank.lo.size());
  lo = Matrix(half, cols);
  hi = Matrix(half, cols);
  for (int i = 0; i < half; ++i) {
    for (int c = 0; c < cols; ++c) {
      double a = 0.0, d = 0.0;
      for (int k = 0; k < taps; ++k) {
        const double x = src((2 * i + k) % rows, c);
        a += bank.lo[k] * x;
        d += bank.hi[k] * x;
      }
      lo(i, c) = a;
      hi(i, c) = d;
    }
  }
}

// Adjoint of analyze_cols: scatter lowpass/highpass halves back to full rows.
Matrix synthesize_cols(const Matrix& lo, const Matrix& hi,
                       const FilterBank& bank) {
  const int half = lo.rows(), cols = lo.cols(), rows = 2 * half;
  const int taps = static_cast<int>(bank.lo.size());
  Matrix out(rows, cols, 0.0);
  for (int i = 0; i < half; ++i) {
    for (int k = 0; k < taps; ++k) {
      const int r = (2 * i + k) % rows;
      const double wl = bank.lo[k], wh = bank.hi[k];
      for (int c = 0; c < cols; ++c) {
        out(r, c) += wl * lo(i, c) + wh * hi(i, c);
      }
    }
  }
  return out;
}

Matrix synthesize_rows(const Matrix& lo, const Matrix& hi,
                       const FilterBank& bank) {
  const int rows = lo.rows(), half = lo.cols(), cols = 2 * half;
  const int taps = static_cast<int>(bank.lo.size());
  Matrix out(rows, cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < half; ++i) {
      const double vl = lo(r, i), vh = hi(r, i);
      for (int k = 0; k < taps; ++k) {
        out(r, (2 * i + k) % cols) += bank.lo[k] * vl + bank.hi[k] * vh;
      }
    }
  }
  return out;
}

}  // namespace

WaveletFamily wavelet_family_from_name(std::string_view name) {
  if (name == "db1") return WaveletFamily::Db1;
  if (name == "db2") return WaveletFamily::Db2;
  if (name == "db4") return WaveletFamily::Db4;
  throw PreconditionError("unknown wavelet family: " + std::string(name));
}

std::string_view wavelet_family_name(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::Db1:
      return "db1";
    case WaveletFamily::Db2:
      return "db2";
    case WaveletFamily::Db4:
      return "db4";
  }
  return "?";
}

GrayImage pad_even(const GrayImage& image) {
  const int rows = image.rows(), cols = image.cols();
  const int out_rows = rows + (rows % 2), out_cols = cols + (cols % 2);
  if (out_rows == rows && out_cols == cols) return image;
  GrayImage out(out_rows, out_cols);
  for (int r = 0; r < out_rows; ++r) {
    const int sr = std::min(r, rows - 1);
    for (int c = 0; c < out_cols; ++c) {
      out(r, c) = image(sr, std::min(c, cols - 1));
    }
  }
  return out;
}

SubbandSet dwt2(const GrayImage& image, const WaveletSpec& spec) {
  if (image.rows() < 2 || image.cols() < 2 || image.rows() % 2 != 0 ||
      image.cols() % 2 != 0) {
    throw PreconditionError("dwt2: dimensions must be even and at least 2x2");
  }
  const FilterBank& bank = bank_for(spec.family);

  Matrix row_lo, row_hi;
  analyze_rows(image, bank, row_lo, row_hi);

  SubbandSet bands;
  analyze_cols(row_lo, bank, bands.ll, bands.hl);
  analyze_cols(row_hi, bank, bands.lh, bands.hh);
  return bands;
}

Matrix idwt2(const SubbandSet& subbands, const WaveletSpec& spec) {
  const Matrix& ll = subbands.ll;
  if (ll.empty()) {
    throw PreconditionError("idwt2: empty subbands");
  }
  if (!ll.same_size(subbands.lh) || !ll.same_size(subbands.hl) ||
      !ll.same_size(subbands.hh)) {
    throw PreconditionError("idwt2: subband dimensions differ");
  }
  const FilterBank& bank = bank_for(spec.family);
  const Matrix row_lo = synthesize_cols(subbands.ll, subbands.hl, bank);
  const Matrix row_hi = synthesize_cols(subbands.lh, subbands.hh, bank);
  return synthesize_rows(row_lo, row_hi, bank);
}

}  // namespace tactfuse
