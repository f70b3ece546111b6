#pragma once

#include <stdexcept>
#include <string>

#include "harmap/types.hpp"

namespace harmap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point was outside the region where the operation is defined.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, Complex point)
      : Error(what), point_(point) {}
  Complex point() const { return point_; }

 private:
  Complex point_;
};

/// Malformed function data (e.g. a Taylor polynomial with too few terms).
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Division by a (numerically) vanishing quantity: h' = 0 or |w| = 1.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, Complex point)
      : Error(what), point_(point) {}
  Complex point() const { return point_; }

 private:
  Complex point_;
};

/// J_f <= 0 where a sense-preserving map was required.
class OrientationError : public Error {
 public:
  OrientationError(const std::string& what, Complex point)
      : Error(what), point_(point) {}
  Complex point() const { return point_; }

 private:
  Complex point_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

}  // namespace harmap
