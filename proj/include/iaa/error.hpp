#pragma once

#include <stdexcept>
#include <string>

namespace iaa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported image file.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Zero-sized images, or masks whose dimensions do not match where they must.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace iaa
