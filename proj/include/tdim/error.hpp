#pragma once

#include <stdexcept>
#include <string>

namespace tdim {

enum class Errc {
  NotRegular,
  Overlap,
  Dangling,
  DegenerateCell,
  NoSuchCell,
  AlreadyDivided,
  LevelOutOfRange,
  WrongLevel,
  UnsupportedDivision,
  DuplicateCoordinate,
  DegenerateDistances,
  PreconditionTooCoarse,
  NConditionViolated,
  RegimeNotCovered,
  UnsupportedSmoothness,
  TooLarge,
  Disconnected,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tdim
