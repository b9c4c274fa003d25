#pragma once

#include <stdexcept>
#include <string>

namespace roispot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FormatErrc {
  bad_magic,
  unsupported_dtype,
  bad_rank,
  bad_header,
  truncated,
  dim_overflow,
  trailing_bytes,
  malformed_line,
};

const char* to_string(FormatErrc code);

/// A file does not follow its on-disk format.
class FormatError : public Error {
 public:
  FormatError(FormatErrc code, const std::string& what)
      : Error(std::string(to_string(code)) + ": " + what), code_(code) {}
  FormatErrc code() const noexcept { return code_; }

 private:
  FormatErrc code_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Detections reference a video that has no ground truth.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace roispot
