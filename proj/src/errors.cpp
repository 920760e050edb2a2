#include "lchkit/errors.hpp"

namespace lchkit {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TopologyError: return "TopologyError";
    case ErrorKind::NotPlat: return "NotPlat";
    case ErrorKind::NotLRS: return "NotLRS";
    case ErrorKind::MapInconsistent: return "MapInconsistent";
    case ErrorKind::DisconnectedPath: return "DisconnectedPath";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::OddPunctureOrder: return "OddPunctureOrder";
    case ErrorKind::FractionalMaslov: return "FractionalMaslov";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::CalibrationFailure: return "CalibrationFailure";
    case ErrorKind::InconsistentLift: return "InconsistentLift";
    case ErrorKind::EmptyRegion: return "EmptyRegion";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

static std::string format_message(ErrorKind kind, const std::string& message, long location) {
  std::string out = error_name(kind);
  if (location >= 0) out += " at " + std::to_string(location);
  out += ": " + message;
  return out;
}

Error::Error(ErrorKind kind, const std::string& message, long location)
    : std::runtime_error(format_message(kind, message, location)), kind_(kind), location_(location) {}

}  // namespace lchkit
