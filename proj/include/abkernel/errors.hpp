#pragma once

#include <stdexcept>
#include <string>

namespace abk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  using Error::Error;
};

struct NonConvergenceError : Error {
  using Error::Error;
};

struct OverlapError : Error {
  using Error::Error;
};

struct AdmissibilityError : Error {
  using Error::Error;
};

struct EmptyRegimeError : Error {
  using Error::Error;
};

struct GridTooSmallError : Error {
  using Error::Error;
};

struct ExtrapolationError : Error {
  using Error::Error;
};

} // namespace abk
