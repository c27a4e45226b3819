#pragma once

#include <string_view>

#include "tactfuse/image.hpp"

namespace tactfuse {

// Daubechies filter order: 2, 4 or 8 taps.
enum class WaveletFamily { Db1, Db2, Db4 };

WaveletFamily wavelet_family_from_name(std::string_view name);
std::string_view wavelet_family_name(WaveletFamily family);

// Orthonormal Daubechies analysis/synthesis bank. Boundary handling is always
// periodic: with periodic extension these filters stay exactly orthogonal at
// every even signal length, so dwt2/idwt2 invert each other to machine
// precision. Filter orthonormality (sum h^2 == 1, even-shift products == 0)
// is asserted when a bank is first built.
struct WaveletSpec {
  WaveletFamily family = WaveletFamily::Db2;
};

// One decomposition level; all four subbands are (height/2) x (width/2).
//   ll  lowpass in x and y: coarse structure
//   lh  highpass x, lowpass y: horizontal detail
//   hl  lowpass x, highpass y: vertical detail
//   hh  highpass both: diagonal detail
struct SubbandSet {
  Matrix ll, lh, hl, hh;
};

// Replicates the last row and/or column when the corresponding dimension is
// odd; identity otherwise.
GrayImage pad_even(const GrayImage& image);

// Separable filter-and-downsample, rows then columns, periodic extension.
// Requires even dimensions. Energy is conserved:
// sum(I^2) == sum(ll^2 + lh^2 + hl^2 + hh^2).
SubbandSet dwt2(const GrayImage& image, const WaveletSpec& spec);

// Exact synthesis inverse of dwt2 under the same spec.
Matrix idwt2(const SubbandSet& subbands, const WaveletSpec& spec);

}  // namespace tactfuse
