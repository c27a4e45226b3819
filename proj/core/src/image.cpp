#include "tactfuse/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>

#include "tactfuse/errors.hpp"

namespace tactfuse {

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PgmError(PgmFault::MissingFile,
                   "cannot open PGM file: " + path.string());
  }

  std::string magic;
  in >> magic;
  if (magic != "P5") {
    throw PgmError(PgmFault::MalformedHeader,
                   path.string() + ": expected binary PGM magic \"P5\", got \"" +
                       magic + "\"");
  }

  long long width = 0, height = 0, maxval = 0;
  if (!(in >> width >> height >> maxval) || width < 1 || height < 1 ||
      maxval < 1) {
    throw PgmError(PgmFault::MalformedHeader,
                   path.string() + ": malformed PGM header");
  }
  if (maxval != 255) {
    throw PgmError(PgmFault::UnsupportedMaxval,
                   path.string() + ": maxval " + std::to_string(maxval) +
                       " unsupported (must be 255)");
  }
  in.get();  // the single whitespace byte separating header from payload

  const std::size_t count =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> bytes(count);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) {
    throw PgmError(PgmFault::TruncatedPayload,
                   path.string() + ": truncated PGM payload (" +
                       std::to_string(in.gcount()) + " of " +
                       std::to_string(count) + " bytes)");
  }

  GrayImage image(static_cast<int>(height), static_cast<int>(width));
  for (std::size_t i = 0; i < count; ++i) {
    image.data()[i] = static_cast<double>(bytes[i]);
  }
  return image;
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
  if (image.empty()) {
    throw PreconditionError("write_pgm: empty image");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out << "P5\n" << image.cols() << ' ' << image.rows() << "\n255\n";
  std::vector<std::uint8_t> bytes(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const long long q = std::llround(image.data()[i]);  // half away from zero
    bytes[i] = static_cast<std::uint8_t>(std::clamp<long long>(q, 0, 255));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

GrayImage remap_to_gray(const Matrix& data) {
  if (data.empty()) {
    throw PreconditionError("remap_to_gray: empty matrix");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double v = data.data()[i];
    if (!std::isfinite(v)) {
      throw PreconditionError("remap_to_gray: non-finite value");
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  GrayImage out(data.rows(), data.cols());
  if (lo == hi) {
    std::fill(out.data(), out.data() + out.size(), 128.0);
    return out;
  }
  const double scale = 255.0 / (hi - lo);
  for (std::size_t i = 0; i < data.size(); ++i) {
    out.data()[i] = (data.data()[i] - lo) * scale;
  }
  return out;
}

GrayImage clip_to_gray(const Matrix& data) {
  GrayImage out(data.rows(), data.cols());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out.data()[i] = std::clamp(data.data()[i], 0.0, 255.0);
  }
  return out;
}

}  // namespace tactfuse
