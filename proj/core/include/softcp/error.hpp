#pragma once

#include <stdexcept>
#include <string>

namespace softcp {

/// Base type for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A geometric transform removed every foreground pixel from a mask.
/// Callers typically recover by drawing a fresh transform or lesion.
class EmptyMaskError : public Error {
 public:
  using Error::Error;
};

/// An image-level crop removed every reference-substance pixel, which
/// would make any subsequent placement infeasible.
class EmptyReferenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace softcp
