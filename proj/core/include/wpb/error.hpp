#pragma once

#include <stdexcept>
#include <string>

namespace wpb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to a constructor or operation (negative index, empty interval, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two exact scalars with different square-free radicals were added.
class RadicalMismatch : public Error {
 public:
  using Error::Error;
};

/// A symbolic operation would exceed the configured degree/order cap.
class OrderOverflow : public Error {
 public:
  using Error::Error;
};

/// The convolution pairing of the two arguments does not exist.
class UndefinedPairing : public Error {
 public:
  using Error::Error;
};

/// A test function was asked for a capability it does not provide.
class CapabilityMissing : public Error {
 public:
  CapabilityMissing(std::string capability, std::string context)
      : Error("capability '" + capability + "' missing: " + context),
        capability_(std::move(capability)) {}

  const std::string& capability() const noexcept { return capability_; }

 private:
  std::string capability_;
};

/// A dual Taylor series was requested for a moment sequence without finite support.
class InfiniteMoments : public Error {
 public:
  using Error::Error;
};

/// A label or literal could not be resolved to a distribution or test function.
class UnresolvedSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace wpb
