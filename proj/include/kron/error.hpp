#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kron {

enum class Errc {
  InvalidPartition,
  ParseError,
  FirstRowTooShort,
  NotContained,
  InvalidPath,
  InsufficientLength,
  ShapeMismatch,
  IndexOutOfRange,
  UnsupportedFamily,
  NotMaximalDepth,
  SizeMismatch,
  Overflow,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::ParseError: return "ParseError";
    case Errc::FirstRowTooShort: return "FirstRowTooShort";
    case Errc::NotContained: return "NotContained";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::InsufficientLength: return "InsufficientLength";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::NotMaximalDepth: return "NotMaximalDepth";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Precondition or domain failure. Results that merely "do not exist"
/// (an illegal box move, an undefined swap) are reported as std::nullopt
/// instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kron
