#pragma once

#include <stdexcept>
#include <string>

namespace dspath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad parameters, bad files, bad paths).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The combined evidence is totally contradictory, so normalization by
/// 1/(1-k) is undefined.
class TotalConflictError : public Error {
 public:
  TotalConflictError() : Error("total conflict: k = 1") {}
};

/// The brute-force combination was asked for a graph above its vertex cap.
class OracleInfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace dspath
