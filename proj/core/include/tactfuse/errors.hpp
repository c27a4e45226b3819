#pragma once

#include <stdexcept>
#include <string>

namespace tactfuse {

// File-level failure (unreadable, unwritable, undecodable input).
// The command-line tool maps these to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Contract violation on an operation's inputs: dimension mismatch,
// out-of-range parameter, empty sequence. Mapped to exit code 4.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// What exactly went wrong while decoding a PGM file.
enum class PgmFault {
  MissingFile,
  MalformedHeader,
  UnsupportedMaxval,
  TruncatedPayload,
};

class PgmError : public IoError {
 public:
  PgmError(PgmFault fault, const std::string& what)
      : IoError(what), fault_(fault) {}
  PgmFault fault() const { return fault_; }

 private:
  PgmFault fault_;
};

}  // namespace tactfuse
