#pragma once

#include <stdexcept>
#include <string>

namespace padic {

enum class Err {
  PrecisionLoss,
  ZeroArgument,
  SplitTorus,
  UnboundedSupport,
  WindowTooSmall,
  UnrecognizedGerm,
  Indeterminate,
  RouteMismatch,
  DepthInsufficient,
  GermMissing,
  NearTracePole,
  WrongStratum,
  ClassViolation,
  NonStabilizing,
  PoleHit,
  ConfigError,
  ParseError,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::PrecisionLoss: return "PrecisionLoss";
    case Err::ZeroArgument: return "ZeroArgument";
    case Err::SplitTorus: return "SplitTorus";
    case Err::UnboundedSupport: return "UnboundedSupport";
    case Err::WindowTooSmall: return "WindowTooSmall";
    case Err::UnrecognizedGerm: return "UnrecognizedGerm";
    case Err::Indeterminate: return "Indeterminate";
    case Err::RouteMismatch: return "RouteMismatch";
    case Err::DepthInsufficient: return "DepthInsufficient";
    case Err::GermMissing: return "GermMissing";
    case Err::NearTracePole: return "NearTracePole";
    case Err::WrongStratum: return "WrongStratum";
    case Err::ClassViolation: return "ClassViolation";
    case Err::NonStabilizing: return "NonStabilizing";
    case Err::PoleHit: return "PoleHit";
    case Err::ConfigError: return "ConfigError";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace padic
