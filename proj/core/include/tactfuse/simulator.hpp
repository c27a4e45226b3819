#pragma once

#include <filesystem>
#include <string_view>

#include "tactfuse/manifest.hpp"

namespace tactfuse {

enum class PatternKind { Point, Line, Curve, Custom };

PatternKind pattern_from_name(std::string_view name);
std::string_view pattern_name(PatternKind kind);

// Synthetic rolling-contact scene. A curved contact layer presses deepest
// under the contact line and shallower toward the sides, so the response
// amplitude follows contact_profile() and defocus blur grows away from the
// band. The pattern sits still in world coordinates while the sensor rolls
// by roll_step per frame; output is deterministic for a fixed seed.
struct SceneSpec {
  PatternKind pattern = PatternKind::Point;
  std::filesystem::path custom_mask;  // PGM, used when pattern == Custom
  int width = 640;
  int height = 480;
  int frames = 4;
  double contact_halfwidth = 260.0;  // px half-extent of the contact band
  double amplitude = 160.0;          // peak response, gray levels
  double background = 60.0;          // resting gray level
  double blur_sigma_max = 8.0;       // defocus far from the contact band, px
  double noise_sigma = 0.5;          // texture / sensor noise, gray levels
  double roll_step = 48.0;           // sensor travel per frame, px
  std::uint64_t seed = 42;
};

// Chord-depth weighting across the rolling axis:
// max(0, 1 - ((x - center)/halfwidth)^2). 1 under the contact line, 0 at and
// beyond +/-halfwidth. halfwidth must be >= 1.
double contact_profile(double x, double center, double halfwidth);

// Centered binary pattern mask in {0, 1}: point = disc of radius
// 0.02 * min dimension, line = horizontal bar of thickness 0.015 * min
// dimension, curve = half-cosine arc of the same thickness, custom = PGM
// thresholded at 128.
Matrix render_pattern_mask(const SceneSpec& spec);

// Column of the contact line in frame t. The offset is chosen so the pattern
// crosses the deep zone mid-sequence, with a quarter-step skew so no two
// frames sit at exactly the same contact distance.
double contact_center(const SceneSpec& spec, int frame_index);

// Column of the pattern center in frame t (the pattern drifts by -roll_step
// per frame as the sensor advances).
double pattern_center_x(const SceneSpec& spec, int frame_index);

// Renders one frame: response B + A*mask*w(x) plus the layer's fixed-pattern
// texture, defocus-blurred with sigma(x) = blur_sigma_max * (1 - w(x)), plus
// per-frame sensor noise, clipped to [0, 255] and quantized.
GrayImage render_frame(const SceneSpec& spec, int frame_index);

// Unblurred, noise-free, full-depth render B + A*mask: the ground-truth
// reference for structural-similarity scoring.
GrayImage render_reference(const SceneSpec& spec);

// Writes frame_000.pgm .. frame_NNN.pgm, reference.pgm and manifest.json into
// out_dir (created if missing) and returns the manifest with resolved paths.
SequenceManifest generate_sequence(const SceneSpec& spec,
                                   const std::filesystem::path& out_dir);

}  // namespace tactfuse
