#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tactfuse/image.hpp"

namespace tactfuse {

// Ordered list of frame files plus free-form acquisition metadata.
// JSON form: {"frames": [...], "pattern_label": "...", "notes": "..."}.
struct SequenceManifest {
  std::vector<std::filesystem::path> frames;
  std::string pattern_label;
  std::string notes;
};

// Parses a manifest. Relative frame paths are resolved against the manifest's
// directory. Throws IoError for unreadable or invalid JSON and
// PreconditionError when the frame list is empty.
SequenceManifest load_manifest(const std::filesystem::path& path);

void save_manifest(const SequenceManifest& manifest,
                   const std::filesystem::path& path);

// Decodes every frame and checks that dimensions are uniform; the error
// message names the first offending file.
std::vector<GrayImage> load_frames(const SequenceManifest& manifest);

}  // namespace tactfuse
