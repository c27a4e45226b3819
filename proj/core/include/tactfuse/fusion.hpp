#pragma once

#include <string_view>
#include <vector>

#include "tactfuse/alignment.hpp"
#include "tactfuse/wavelet.hpp"

namespace tactfuse {

struct FusionConfig {
  WaveletSpec wavelet;
  bool align = true;
  double template_frac = 0.5;  // in (0, 1]
  int max_shift = 32;          // >= 0
  bool remap = true;  // min-max remap of the final accumulator (else clip)
};

// Exactly one mechanism replaced, everything else held fixed:
//   NoWavelet    pairwise fusion is the plain pixel mean, no transform
//   LfPickFirst  the fused lowpass band is taken from the accumulator
//   HfMax        each highpass coefficient keeps the larger magnitude
enum class AblationMode { NoWavelet, LfPickFirst, HfMax };

AblationMode ablation_mode_from_name(std::string_view name);
std::string_view ablation_mode_name(AblationMode mode);

// Alignment record of one sequence fold; shifts[i] was applied to frame i+1
// (frame 0 anchors the accumulator).
struct FoldTrace {
  std::vector<Shift> shifts;
};

// Wavelet-domain fusion of two images of identical even dimensions (at least
// 4x4, since the saliency stencil needs 3x3): lowpass bands are averaged,
// highpass bands are blended with the per-pixel saliency weights of the two
// spatial-domain inputs, and the result is synthesized back. Returns the
// real-valued matrix before any remapping.
Matrix fuse_pair(const GrayImage& a, const GrayImage& b,
                 const FusionConfig& config);

// Cyclic left fold: the accumulator starts as frames[0] (padded to even
// dimensions) and each later frame is padded, optionally aligned to the
// accumulator's remapped snapshot, and fused in. The accumulator stays
// real-valued between steps; the snapshot feeds shift estimation only. The
// final accumulator is remapped to [0, 255] when config.remap, else clipped.
GrayImage fuse_sequence(const std::vector<GrayImage>& frames,
                        const FusionConfig& config,
                        FoldTrace* trace = nullptr);

// The same fold with one fusion mechanism swapped out (see AblationMode).
GrayImage ablate(const std::vector<GrayImage>& frames, AblationMode mode,
                 const FusionConfig& config, FoldTrace* trace = nullptr);

}  // namespace tactfuse
