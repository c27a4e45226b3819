#include "tactfuse/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "tactfuse/errors.hpp"

namespace tactfuse {

SequenceManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open manifest: " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("invalid manifest JSON in " + path.string() + ": " +
                  e.what());
  }
  if (!doc.is_object() || !doc.contains("frames") ||
      !doc["frames"].is_array()) {
    throw IoError("invalid manifest " + path.string() +
                  ": expected an object with a \"frames\" array");
  }

  SequenceManifest manifest;
  const auto base = path.parent_path();
  for (const auto& entry : doc["frames"]) {
    if (!entry.is_string()) {
      throw IoError("invalid manifest " + path.string() +
                    ": frame entries must be strings");
    }
    std::filesystem::path frame = entry.get<std::string>();
    manifest.frames.push_back(frame.is_absolute() ? frame : base / frame);
  }
  if (manifest.frames.empty()) {
    throw PreconditionError("manifest " + path.string() + ": no frames");
  }
  manifest.pattern_label = doc.value("pattern_label", std::string{});
  manifest.notes = doc.value("notes", std::string{});
  return manifest;
}

void save_manifest(const SequenceManifest& manifest,
                   const std::filesystem::path& path) {
  nlohmann::ordered_json doc;
  auto frames = nlohmann::ordered_json::array();
  for (const auto& frame : manifest.frames) {
    frames.push_back(frame.generic_string());
  }
  doc["frames"] = std::move(frames);
  doc["pattern_label"] = manifest.pattern_label;
  doc["notes"] = manifest.notes;

  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write manifest: " + path.string());
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

std::vector<GrayImage> load_frames(const SequenceManifest& manifest) {
  if (manifest.frames.empty()) {
    throw PreconditionError("manifest has no frames");
  }
  std::vector<GrayImage> frames;
  frames.reserve(manifest.frames.size());
  for (const auto& path : manifest.frames) {
    GrayImage frame = read_pgm(path);
    if (!frames.empty() && !frame.same_size(frames.front())) {
      throw PreconditionError(
          "frame dimensions differ: " + path.string() + " is " +
          std::to_string(frame.cols()) + "x" + std::to_string(frame.rows()) +
          ", expected " + std::to_string(frames.front().cols()) + "x" +
          std::to_string(frames.front().rows()));
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace tactfuse
