#pragma once

#include <stdexcept>
#include <string>

namespace lchkit {

enum class ErrorKind {
  SyntaxError,
  TopologyError,
  NotPlat,
  NotLRS,
  MapInconsistent,
  DisconnectedPath,
  ArityMismatch,
  OddPunctureOrder,
  FractionalMaslov,
  InvalidTopology,
  CalibrationFailure,
  InconsistentLift,
  EmptyRegion,
  IllConditioned,
  NoSignChange,
  UnknownFace,
  InvalidArgument,
  IoError,
};

const char* error_name(ErrorKind kind);

// Error carrying a module error name and an optional location (event index, face id, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, long location = -1);

  ErrorKind kind() const { return kind_; }
  const char* name() const { return error_name(kind_); }
  long location() const { return location_; }

 private:
  ErrorKind kind_;
  long location_;
};

}  // namespace lchkit
