// tactfuse: fuse rolling-contact tactile image sequences, run the fusion
// ablations, score images (information entropy, MS-SSIM), and generate
// synthetic scenes.
//
// Exit codes: 0 success, 2 bad arguments, 3 I/O failure, 4 pipeline
// precondition violation.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tactfuse/errors.hpp"
#include "tactfuse/fusion.hpp"
#include "tactfuse/manifest.hpp"
#include "tactfuse/metrics.hpp"
#include "tactfuse/saliency.hpp"
#include "tactfuse/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct FuseOptions {
  std::string manifest_path;
  std::string out_path;
  std::string wavelet = "db2";
  bool no_align = false;
  double template_frac = 0.5;
  int max_shift = 32;
  bool no_remap = false;
  std::string report_path;
  std::string saliency_dir;  // debug: dump per-frame saliency maps
  std::string mode;          // ablate only
};

struct MetricsOptions {
  std::string image_path;
  std::string reference_path;
  std::string out_path;
};

struct SimulateOptions {
  std::string pattern = "point";
  std::string mask_path;
  std::string out_dir;
  int frames = 4;
  tactfuse::SceneSpec defaults;  // numeric defaults come from SceneSpec
  int width = 640;
  int height = 480;
  double contact_halfwidth = 260.0;
  double amplitude = 160.0;
  double background = 60.0;
  double blur_sigma_max = 8.0;
  double noise_sigma = 0.5;
  double roll_step = 48.0;
  std::uint64_t seed = 42;
};

void add_fuse_flags(CLI::App* cmd, FuseOptions& opt) {
  cmd->add_option("--manifest", opt.manifest_path, "Sequence manifest JSON")
      ->required();
  cmd->add_option("--out", opt.out_path, "Fused output PGM")->required();
  cmd->add_option("--wavelet", opt.wavelet, "Wavelet family")
      ->check(CLI::IsMember({"db1", "db2", "db4"}))
      ->capture_default_str();
  cmd->add_flag("--no-align", opt.no_align,
                "Skip template-matching alignment");
  cmd->add_option("--template-frac", opt.template_frac,
                  "Template side as a fraction of the min dimension")
      ->check(CLI::Range(1e-9, 1.0))
      ->capture_default_str();
  cmd->add_option("--max-shift", opt.max_shift, "Alignment search radius, px")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_flag("--no-remap", opt.no_remap,
                "Clip the result instead of min-max remapping");
  cmd->add_option("--report", opt.report_path, "Write a JSON run report");
  cmd->add_option("--dump-saliency", opt.saliency_dir,
                  "Debug: write per-frame saliency maps into this directory");
}

tactfuse::FusionConfig config_from(const FuseOptions& opt) {
  tactfuse::FusionConfig config;
  config.wavelet.family = tactfuse::wavelet_family_from_name(opt.wavelet);
  config.align = !opt.no_align;
  config.template_frac = opt.template_frac;
  config.max_shift = opt.max_shift;
  config.remap = !opt.no_remap;
  return config;
}

ordered_json config_json(const FuseOptions& opt,
                         const tactfuse::FusionConfig& config) {
  ordered_json j;
  j["wavelet"] = opt.wavelet;
  j["align"] = config.align;
  j["template_frac"] = config.template_frac;
  j["max_shift"] = config.max_shift;
  j["remap"] = config.remap;
  if (!opt.mode.empty()) j["mode"] = opt.mode;
  return j;
}

std::string joined_command(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

void dump_saliency_maps(const std::vector<tactfuse::GrayImage>& frames,
                        const fs::path& dir) {
  fs::create_directories(dir);
  for (std::size_t t = 0; t < frames.size(); ++t) {
    char name[32];
    std::snprintf(name, sizeof(name), "saliency_%03zu.pgm", t);
    const tactfuse::GrayImage padded = tactfuse::pad_even(frames[t]);
    tactfuse::write_pgm(
        tactfuse::remap_to_gray(tactfuse::saliency_map(padded)), dir / name);
  }
}

int run_fuse(const FuseOptions& opt, const std::string& command_echo) {
  const auto start = std::chrono::steady_clock::now();
  const tactfuse::SequenceManifest manifest =
      tactfuse::load_manifest(opt.manifest_path);
  const std::vector<tactfuse::GrayImage> frames =
      tactfuse::load_frames(manifest);
  const tactfuse::FusionConfig config = config_from(opt);

  if (!opt.saliency_dir.empty()) {
    dump_saliency_maps(frames, opt.saliency_dir);
  }

  tactfuse::FoldTrace trace;
  tactfuse::GrayImage fused;
  if (opt.mode.empty()) {
    fused = tactfuse::fuse_sequence(frames, config, &trace);
  } else {
    fused = tactfuse::ablate(
        frames, tactfuse::ablation_mode_from_name(opt.mode), config, &trace);
  }
  tactfuse::write_pgm(fused, opt.out_path);

  if (!opt.report_path.empty()) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    ordered_json report;
    report["command"] = command_echo;
    report["config"] = config_json(opt, config);
    auto shifts = ordered_json::array();
    for (std::size_t i = 0; i < trace.shifts.size(); ++i) {
      const tactfuse::Shift& s = trace.shifts[i];
      shifts.push_back({{"frame", i + 1},
                        {"dx", s.dx},
                        {"dy", s.dy},
                        {"score", s.score}});
    }
    report["shifts"] = std::move(shifts);
    report["outputs"] = ordered_json::array({opt.out_path});
    report["metrics"] = nullptr;
    report["duration_seconds"] = seconds;

    std::ofstream out(opt.report_path);
    if (!out) throw tactfuse::IoError("cannot write report: " + opt.report_path);
    out << report.dump(2) << '\n';
  }
  return 0;
}

int run_metrics(const MetricsOptions& opt) {
  const tactfuse::GrayImage image = tactfuse::read_pgm(opt.image_path);

  ordered_json doc;
  doc["ie"] = tactfuse::information_entropy(image);
  if (!opt.reference_path.empty()) {
    tactfuse::GrayImage reference = tactfuse::read_pgm(opt.reference_path);
    if (!reference.same_size(image)) {
      reference =
          tactfuse::resize_nearest(reference, image.rows(), image.cols());
    }
    doc["ms_ssim"] = tactfuse::ms_ssim(image, reference);
  } else {
    doc["ms_ssim"] = nullptr;
  }
  doc["image"] = opt.image_path;
  if (opt.reference_path.empty()) {
    doc["reference"] = nullptr;
  } else {
    doc["reference"] = opt.reference_path;
  }

  if (opt.out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw tactfuse::IoError("cannot write: " + opt.out_path);
    out << doc.dump(2) << '\n';
  }
  return 0;
}

int run_simulate(const SimulateOptions& opt) {
  tactfuse::SceneSpec spec;
  spec.pattern = tactfuse::pattern_from_name(opt.pattern);
  spec.custom_mask = opt.mask_path;
  spec.width = opt.width;
  spec.height = opt.height;
  spec.frames = opt.frames;
  spec.contact_halfwidth = opt.contact_halfwidth;
  spec.amplitude = opt.amplitude;
  spec.background = opt.background;
  spec.blur_sigma_max = opt.blur_sigma_max;
  spec.noise_sigma = opt.noise_sigma;
  spec.roll_step = opt.roll_step;
  spec.seed = opt.seed;
  if (spec.pattern == tactfuse::PatternKind::Custom && opt.mask_path.empty()) {
    throw tactfuse::PreconditionError("--pattern custom requires --mask");
  }
  tactfuse::generate_sequence(spec, opt.out_dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic wavelet fusion for rolling-contact tactile sequences"};
  app.require_subcommand(1);

  FuseOptions fuse_opt;
  CLI::App* fuse_cmd =
      app.add_subcommand("fuse", "Fuse a frame sequence into one image");
  add_fuse_flags(fuse_cmd, fuse_opt);

  FuseOptions ablate_opt;
  CLI::App* ablate_cmd = app.add_subcommand(
      "ablate", "Fuse with exactly one fusion mechanism replaced");
  add_fuse_flags(ablate_cmd, ablate_opt);
  ablate_cmd->add_option("--mode", ablate_opt.mode, "Ablation mode")
      ->check(CLI::IsMember({"no-wavelet", "lf-pick-first", "hf-max"}))
      ->required();

  MetricsOptions metrics_opt;
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "Report IE (and MS-SSIM vs a reference)");
  metrics_cmd->add_option("--image", metrics_opt.image_path, "Image to score")
      ->required();
  metrics_cmd->add_option("--reference", metrics_opt.reference_path,
                          "Reference image for MS-SSIM");
  metrics_cmd->add_option("--out", metrics_opt.out_path,
                          "Write the JSON report here instead of stdout");

  SimulateOptions sim_opt;
  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "Generate a synthetic rolling-contact scene");
  sim_cmd->add_option("--pattern", sim_opt.pattern, "Pattern unit")
      ->check(CLI::IsMember({"point", "line", "curve", "custom"}))
      ->capture_default_str();
  sim_cmd->add_option("--mask", sim_opt.mask_path,
                      "Custom pattern mask PGM (with --pattern custom)");
  sim_cmd->add_option("--out", sim_opt.out_dir, "Output directory")
      ->required();
  sim_cmd->add_option("--frames", sim_opt.frames, "Frame count (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim_cmd->add_option("--width", sim_opt.width, "Frame width, px")
      ->capture_default_str();
  sim_cmd->add_option("--height", sim_opt.height, "Frame height, px")
      ->capture_default_str();
  sim_cmd->add_option("--contact-halfwidth", sim_opt.contact_halfwidth,
                      "Contact band half-extent, px")
      ->capture_default_str();
  sim_cmd->add_option("--amplitude", sim_opt.amplitude,
                      "Peak response, gray levels")
      ->capture_default_str();
  sim_cmd->add_option("--background", sim_opt.background,
                      "Resting gray level")
      ->capture_default_str();
  sim_cmd->add_option("--blur-sigma-max", sim_opt.blur_sigma_max,
                      "Defocus blur far from the contact band, px")
      ->capture_default_str();
  sim_cmd->add_option("--noise-sigma", sim_opt.noise_sigma,
                      "Texture/sensor noise, gray levels")
      ->capture_default_str();
  sim_cmd->add_option("--roll-step", sim_opt.roll_step,
                      "Sensor travel per frame, px")
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim_opt.seed, "PRNG seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fuse_cmd->parsed()) {
      return run_fuse(fuse_opt, joined_command(argc, argv));
    }
    if (ablate_cmd->parsed()) {
      return run_fuse(ablate_opt, joined_command(argc, argv));
    }
    if (metrics_cmd->parsed()) {
      return run_metrics(metrics_opt);
    }
    if (sim_cmd->parsed()) {
      return run_simulate(sim_opt);
    }
  } catch (const tactfuse::IoError& e) {
    std::cerr << "tactfuse: " << e.what() << '\n';
    return 3;
  } catch (const tactfuse::PreconditionError& e) {
    std::cerr << "tactfuse: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "tactfuse: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
