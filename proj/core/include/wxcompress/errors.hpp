#ifndef WXCOMPRESS_ERRORS_HPP
#define WXCOMPRESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wxc {

// Exception hierarchy shared by all modules.  The CLI maps these to its
// stable exit codes (argument=2, io=3, format=4, empty scene=5,
// numerical=6, fingerprint mismatch=7).

struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Per-line METAR decode failure (empty line, missing station id).
struct ParseError : FormatError {
    explicit ParseError(const std::string& msg) : FormatError(msg) {}
};

// Basis file whose recomputed site fingerprint differs from the stored one.
struct CorruptionError : FormatError {
    explicit CorruptionError(const std::string& msg) : FormatError(msg) {}
};

struct EmptySceneError : std::runtime_error {
    explicit EmptySceneError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Scene offered to a basis built for a different site list.
struct FingerprintMismatchError : std::runtime_error {
    explicit FingerprintMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// Compressibility level of a zero-energy scene is undefined.
struct UndefinedLevelError : ArgumentError {
    explicit UndefinedLevelError(const std::string& msg) : ArgumentError(msg) {}
};

}  // namespace wxc

#endif
