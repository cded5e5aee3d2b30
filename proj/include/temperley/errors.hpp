#pragma once

#include <stdexcept>
#include <string>

namespace temperley {

// Stable error codes surfaced through the CLI (exit code 2 for input
// problems, 1 for failed verification checks).
enum class Errc {
    // document / validation
    BadDocument,
    NotConnected,
    HasSelfLoop,
    HasBridge,
    RootNotOnOuterFace,
    AmbiguousRotation,
    AmbiguousOuterFace,
    NonPlanarRotation,
    UnknownVertex,
    NotACycle,
    // exact linear algebra
    NotSquare,
    DimensionMismatch,
    InfiniteCokernelCoordinate,
    SingularMatrix,
    // orientations
    TooLarge,
    BadReferenceDegree,
    NotQConnected,
    // gplus / action
    NotKasteleyn,
    NotInImage,
    WrongReferenceOrientation,
    NoPreimage,
    Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace temperley
