#include "tactfuse/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tactfuse/errors.hpp"
#include "tactfuse/rng.hpp"

namespace tactfuse {

namespace {

void validate_spec(const SceneSpec& spec) {
  if (spec.width < 4 || spec.height < 4) {
    throw PreconditionError("simulator: image must be at least 4x4");
  }
  if (spec.frames < 1) {
    throw PreconditionError("simulator: frame count must be >= 1");
  }
  if (spec.contact_halfwidth < 1.0) {
    throw PreconditionError("simulator: contact_halfwidth must be >= 1");
  }
  if (spec.background < 0.0 || spec.amplitude < 0.0 ||
      spec.background + spec.amplitude > 255.0) {
    throw PreconditionError(
        "simulator: need 0 <= background and background + amplitude <= 255");
  }
  if (spec.noise_sigma < 0.0 || spec.blur_sigma_max < 0.0 ||
      spec.roll_step < 0.0) {
    throw PreconditionError("simulator: negative noise/blur/roll parameters");
  }
}

// World coordinates: world x' = image x + t * roll_step; frame 0 and the
// pattern mask both live in the world window [0, width).
struct PatternGeometry {
  const SceneSpec& spec;
  Matrix custom;  // loaded only for PatternKind::Custom

  double center_x() const { return (spec.width - 1) / 2.0; }
  double center_y() const { return (spec.height - 1) / 2.0; }
  double min_dim() const { return std::min(spec.width, spec.height); }

  double sample(double wx, int y) const {
    switch (spec.pattern) {
      case PatternKind::Point: {
        const double radius = 0.02 * min_dim();
        const double dx = wx - center_x();
        const double dy = y - center_y();
        return (dx * dx + dy * dy <= radius * radius) ? 1.0 : 0.0;
      }
      case PatternKind::Line: {
        // A long bar: unbounded along the rolling axis.
        const double half_thickness = 0.5 * 0.015 * min_dim();
        return (std::abs(y - center_y()) <= half_thickness) ? 1.0 : 0.0;
      }
      case PatternKind::Curve: {
        if (wx < 0.0 || wx > spec.width - 1) return 0.0;
        const double half_thickness = 0.5 * 0.015 * min_dim();
        const double arch = 0.2 * spec.height;
        const double yc =
            center_y() - arch * std::sin(kPi * wx / (spec.width - 1));
        return (std::abs(y - yc) <= half_thickness) ? 1.0 : 0.0;
      }
      case PatternKind::Custom: {
        const int xi = static_cast<int>(std::lround(wx));
        if (xi < 0 || xi >= custom.cols() || y < 0 || y >= custom.rows()) {
          return 0.0;
        }
        return custom(y, xi);
      }
    }
    return 0.0;
  }

  static constexpr double kPi = 3.14159265358979323846;
};

PatternGeometry make_geometry(const SceneSpec& spec) {
  PatternGeometry geometry{spec, {}};
  if (spec.pattern == PatternKind::Custom) {
    const GrayImage raw = read_pgm(spec.custom_mask);
    Matrix mask(raw.rows(), raw.cols());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      mask.data()[i] = raw.data()[i] >= 128.0 ? 1.0 : 0.0;
    }
    geometry.custom = std::move(mask);
  }
  return geometry;
}

// Texture contrast relative to per-frame read noise. The contact layer's
// fixed-pattern texture is the information the fusion is meant to preserve,
// so it sits well above the read noise.
constexpr double kTextureGain = 8.0;

// The contact layer's fixed-pattern texture, drawn once per scene. It lives
// on the sensing surface, so it is anchored to image coordinates and shared
// by every frame; only its local sharpness changes as the focal band sweeps.
Matrix texture_field(const SceneSpec& spec) {
  Matrix field(spec.height, spec.width);
  Lcg64 rng =
      Lcg64::substream(spec.seed, static_cast<std::uint64_t>(spec.frames));
  for (std::size_t i = 0; i < field.size(); ++i) {
    field.data()[i] = kTextureGain * spec.noise_sigma * rng.next_gaussian();
  }
  return field;
}

// Separable Gaussian blur whose sigma depends on the output column only
// (defocus varies along the rolling axis; the contact line is translation
// invariant along its own axis). Replicate edges.
Matrix blur_varying(const Matrix& src, const std::vector<double>& sigma) {
  const int rows = src.rows(), cols = src.cols();

  std::vector<std::vector<double>> kernels(cols);
  for (int c = 0; c < cols; ++c) {
    const double s = sigma[c];
    if (s < 1e-6) {
      kernels[c] = {1.0};
      continue;
    }
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * s)));
    std::vector<double> k(2 * radius + 1);
    double total = 0.0;
    for (int i = -radius; i <= radius; ++i) {
      k[i + radius] = std::exp(-0.5 * (i * i) / (s * s));
      total += k[i + radius];
    }
    for (double& v : k) v /= total;
    kernels[c] = std::move(k);
  }

  Matrix horizontal(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const auto& k = kernels[c];
      const int radius = (static_cast<int>(k.size()) - 1) / 2;
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        acc += k[i + radius] * src(r, std::clamp(c + i, 0, cols - 1));
      }
      horizontal(r, c) = acc;
    }
  }
  Matrix out(rows, cols);
  for (int c = 0; c < cols; ++c) {
    const auto& k = kernels[c];
    const int radius = (static_cast<int>(k.size()) - 1) / 2;
    for (int r = 0; r < rows; ++r) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        acc += k[i + radius] * horizontal(std::clamp(r + i, 0, rows - 1), c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace

PatternKind pattern_from_name(std::string_view name) {
  if (name == "point") return PatternKind::Point;
  if (name == "line") return PatternKind::Line;
  if (name == "curve") return PatternKind::Curve;
  if (name == "custom") return PatternKind::Custom;
  throw PreconditionError("unknown pattern: " + std::string(name));
}

std::string_view pattern_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::Point:
      return "point";
    case PatternKind::Line:
      return "line";
    case PatternKind::Curve:
      return "curve";
    case PatternKind::Custom:
      return "custom";
  }
  return "?";
}

double contact_profile(double x, double center, double halfwidth) {
  if (halfwidth < 1.0) {
    throw PreconditionError("contact_profile: halfwidth must be >= 1");
  }
  const double t = (x - center) / halfwidth;
  return std::max(0.0, 1.0 - t * t);
}

Matrix render_pattern_mask(const SceneSpec& spec) {
  validate_spec(spec);
  const PatternGeometry geometry = make_geometry(spec);
  Matrix mask(spec.height, spec.width);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      mask(y, x) = geometry.sample(x, y);
    }
  }
  return mask;
}

double contact_center(const SceneSpec& spec, int frame_index) {
  // The deep zone meets the pattern at frame floor(frames/2); the quarter
  // step skews the sweep so every frame sits at a distinct contact distance.
  const double meet = spec.frames / 2 - 0.25;
  const double offset = (spec.width - 1) / 2.0 - 2.0 * spec.roll_step * meet;
  return offset + frame_index * spec.roll_step;
}

double pattern_center_x(const SceneSpec& spec, int frame_index) {
  return (spec.width - 1) / 2.0 - frame_index * spec.roll_step;
}

GrayImage render_frame(const SceneSpec& spec, int frame_index) {
  validate_spec(spec);
  if (frame_index < 0 || frame_index >= spec.frames) {
    throw PreconditionError("render_frame: frame index out of range");
  }
  const PatternGeometry geometry = make_geometry(spec);
  const Matrix texture = texture_field(spec);
  const double contact = contact_center(spec, frame_index);
  const double travel = frame_index * spec.roll_step;

  std::vector<double> depth(spec.width), sigma(spec.width);
  for (int x = 0; x < spec.width; ++x) {
    depth[x] = contact_profile(x, contact, spec.contact_halfwidth);
    sigma[x] = spec.blur_sigma_max * (1.0 - depth[x]);
  }

  Matrix base(spec.height, spec.width);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      // The pattern lives in world coordinates and drifts by -roll_step per
      // frame; the fixed-pattern texture stays put in image coordinates.
      base(y, x) = spec.background +
                   spec.amplitude * geometry.sample(x + travel, y) * depth[x] +
                   texture(y, x);
    }
  }

  Matrix blurred = blur_varying(base, sigma);

  Lcg64 rng =
      Lcg64::substream(spec.seed, static_cast<std::uint64_t>(frame_index));
  GrayImage frame(spec.height, spec.width);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const double v = blurred.data()[i] + spec.noise_sigma * rng.next_gaussian();
    frame.data()[i] =
        static_cast<double>(std::clamp<long long>(std::llround(v), 0, 255));
  }
  return frame;
}

GrayImage render_reference(const SceneSpec& spec) {
  validate_spec(spec);
  const PatternGeometry geometry = make_geometry(spec);
  GrayImage reference(spec.height, spec.width);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      reference(y, x) =
          spec.background + spec.amplitude * geometry.sample(x, y);
    }
  }
  return reference;
}

SequenceManifest generate_sequence(const SceneSpec& spec,
                                   const std::filesystem::path& out_dir) {
  validate_spec(spec);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " + out_dir.string());
  }

  SequenceManifest manifest;
  manifest.pattern_label = std::string(pattern_name(spec.pattern));
  manifest.notes = "synthetic rolling-contact scene, seed " +
                   std::to_string(spec.seed);

  SequenceManifest relative = manifest;
  for (int t = 0; t < spec.frames; ++t) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%03d.pgm", t);
    write_pgm(render_frame(spec, t), out_dir / name);
    manifest.frames.push_back(out_dir / name);
    relative.frames.push_back(name);
  }
  write_pgm(render_reference(spec), out_dir / "reference.pgm");
  save_manifest(relative, out_dir / "manifest.json");
  return manifest;
}

}  // namespace tactfuse
