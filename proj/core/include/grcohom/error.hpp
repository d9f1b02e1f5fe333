#pragma once

#include <stdexcept>
#include <string>

namespace grcohom {

enum class Errc {
  NotSharp,
  ZeroDimension,
  RankDeficient,
  DimensionMismatch,
  Unbounded,
  BoxTooSmall,
  NotQGraded,
  NotSaturated,
  NotInColon,
  NotComplex,
  NotStabilized,
  VerificationFailed,
  ShapeMismatch,
  IndexOutOfRange,
  SchemaError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSharp: return "NotSharp";
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Unbounded: return "Unbounded";
    case Errc::BoxTooSmall: return "BoxTooSmall";
    case Errc::NotQGraded: return "NotQGraded";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::NotInColon: return "NotInColon";
    case Errc::NotComplex: return "NotComplex";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SchemaError: return "SchemaError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace grcohom
