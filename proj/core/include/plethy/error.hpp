#pragma once

#include <stdexcept>
#include <string>

namespace plethy {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different coefficient rings (or different primes).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not defined over the chosen ring,
/// e.g. rank over Z, or the Lie algebra action over F_p.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

/// A mathematical statement that the library checks turned out false.
/// Seeing one of these means a theorem was falsified or the code is wrong.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A vector handed to a kernel-coordinate routine is not in the kernel.
class NotInKernel : public Error {
 public:
  using Error::Error;
};

}  // namespace plethy
