#ifndef STARSPLINE_ERROR_HPP
#define STARSPLINE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace starspline {

enum class Errc {
  InvalidInput,
  DegenerateCell,
  NonManifoldLink,
  Disconnected,
  DegenerateFace,
  UnknownName,
  NotClosed,
  NotOpen,
  InvalidProfile,
  TooFewEdges,
  DegreeTooSmall,
  NotFull,
  NotPositive,
  ConfigNotRegular,
  BoundNotAboveOne,
  ParseError,
  CacheMismatch,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::DegenerateCell: return "DegenerateCell";
    case Errc::NonManifoldLink: return "NonManifoldLink";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DegenerateFace: return "DegenerateFace";
    case Errc::UnknownName: return "UnknownName";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotOpen: return "NotOpen";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::TooFewEdges: return "TooFewEdges";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NotFull: return "NotFull";
    case Errc::NotPositive: return "NotPositive";
    case Errc::ConfigNotRegular: return "ConfigNotRegular";
    case Errc::BoundNotAboveOne: return "BoundNotAboveOne";
    case Errc::ParseError: return "ParseError";
    case Errc::CacheMismatch: return "CacheMismatch";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace starspline

#endif  // STARSPLINE_ERROR_HPP
