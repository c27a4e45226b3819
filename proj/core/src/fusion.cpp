#include "tactfuse/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tactfuse/errors.hpp"
#include "tactfuse/saliency.hpp"

namespace tactfuse {

namespace {

enum class PairRule { Standard, NoWavelet, LlFromFirst, HfMaxAbs };

void check_config(const FusionConfig& config) {
  if (!(config.template_frac > 0.0 && config.template_frac <= 1.0)) {
    throw PreconditionError("fusion: template_frac must be in (0, 1]");
  }
  if (config.max_shift < 0) {
    throw PreconditionError("fusion: max_shift must be >= 0");
  }
}

Matrix elementwise_mean(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.data()[i] = 0.5 * (a.data()[i] + b.data()[i]);
  }
  return out;
}

// Per-pixel magnitude selection for one highpass band; ties keep `a`.
Matrix max_abs_select(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double va = a.data()[i], vb = b.data()[i];
    out.data()[i] = std::abs(vb) > std::abs(va) ? vb : va;
  }
  return out;
}

Matrix weighted_blend(const Matrix& a, const Matrix& b, const Matrix& w1,
                      const Matrix& w2) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.data()[i] = a.data()[i] * w1.data()[i] + b.data()[i] * w2.data()[i];
  }
  return out;
}

Matrix fuse_pair_rule(const Matrix& a, const Matrix& b,
                      const WaveletSpec& spec, PairRule rule) {
  if (!a.same_size(b)) {
    throw PreconditionError("fuse_pair: image dimensions differ");
  }
  if (rule == PairRule::NoWavelet) {
    return elementwise_mean(a, b);
  }
  if (a.rows() < 4 || a.cols() < 4 || a.rows() % 2 != 0 || a.cols() % 2 != 0) {
    throw PreconditionError(
        "fuse_pair: dimensions must be even and at least 4x4");
  }

  const SubbandSet sa = dwt2(a, spec);
  const SubbandSet sb = dwt2(b, spec);

  SubbandSet fused;
  fused.ll = (rule == PairRule::LlFromFirst) ? sa.ll
                                             : elementwise_mean(sa.ll, sb.ll);
  if (rule == PairRule::HfMaxAbs) {
    fused.lh = max_abs_select(sa.lh, sb.lh);
    fused.hl = max_abs_select(sa.hl, sb.hl);
    fused.hh = max_abs_select(sa.hh, sb.hh);
  } else {
    // One weight pair, derived from the spatial-domain inputs, shared by all
    // three highpass bands.
    const SaliencyWeights weights = fusion_weights(
        adjust_saliency(saliency_map(a)), adjust_saliency(saliency_map(b)));
    fused.lh = weighted_blend(sa.lh, sb.lh, weights.w1, weights.w2);
    fused.hl = weighted_blend(sa.hl, sb.hl, weights.w1, weights.w2);
    fused.hh = weighted_blend(sa.hh, sb.hh, weights.w1, weights.w2);
  }
  return idwt2(fused, spec);
}

GrayImage fold_sequence(const std::vector<GrayImage>& frames,
                        const FusionConfig& config, PairRule rule,
                        FoldTrace* trace) {
  check_config(config);
  if (frames.empty()) {
    throw PreconditionError("fuse_sequence: empty sequence");
  }
  for (const auto& frame : frames) {
    if (!frame.same_size(frames.front())) {
      throw PreconditionError("fuse_sequence: frame dimensions differ");
    }
  }
  if (trace) trace->shifts.clear();

  Matrix accumulator = pad_even(frames.front());
  for (std::size_t t = 1; t < frames.size(); ++t) {
    GrayImage frame = pad_even(frames[t]);
    if (config.align) {
      // The snapshot exists only for shift estimation; it never feeds back
      // into the accumulator values.
      const GrayImage snapshot = remap_to_gray(accumulator);
      const Shift shift = estimate_shift(snapshot, frame,
                                         config.template_frac,
                                         config.max_shift);
      frame = apply_shift(frame, shift);
      if (trace) trace->shifts.push_back(shift);
    } else if (trace) {
      trace->shifts.push_back(Shift{});
    }
    accumulator = fuse_pair_rule(accumulator, frame, config.wavelet, rule);
  }
  return config.remap ? remap_to_gray(accumulator)
                      : clip_to_gray(accumulator);
}

}  // namespace

AblationMode ablation_mode_from_name(std::string_view name) {
  if (name == "no-wavelet") return AblationMode::NoWavelet;
  if (name == "lf-pick-first") return AblationMode::LfPickFirst;
  if (name == "hf-max") return AblationMode::HfMax;
  throw PreconditionError("unknown ablation mode: " + std::string(name));
}

std::string_view ablation_mode_name(AblationMode mode) {
  switch (mode) {
    case AblationMode::NoWavelet:
      return "no-wavelet";
    case AblationMode::LfPickFirst:
      return "lf-pick-first";
    case AblationMode::HfMax:
      return "hf-max";
  }
  return "?";
}

Matrix fuse_pair(const GrayImage& a, const GrayImage& b,
                 const FusionConfig& config) {
  check_config(config);
  return fuse_pair_rule(a, b, config.wavelet, PairRule::Standard);
}

GrayImage fuse_sequence(const std::vector<GrayImage>& frames,
                        const FusionConfig& config, FoldTrace* trace) {
  return fold_sequence(frames, config, PairRule::Standard, trace);
}

GrayImage ablate(const std::vector<GrayImage>& frames, AblationMode mode,
                 const FusionConfig& config, FoldTrace* trace) {
  PairRule rule = PairRule::Standard;
  switch (mode) {
    case AblationMode::NoWavelet:
      rule = PairRule::NoWavelet;
      break;
    case AblationMode::LfPickFirst:
      rule = PairRule::LlFromFirst;
      break;
    case AblationMode::HfMax:
      rule = PairRule::HfMaxAbs;
      break;
  }
  return fold_sequence(frames, config, rule, trace);
}

}  // namespace tactfuse
