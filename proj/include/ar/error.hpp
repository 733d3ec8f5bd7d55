#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ar {

// Base of every error raised for bad input or an unmet precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Letter outside the alphabet, malformed word text, bad argument value.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The directive sequence is too short (or the prefix cap too small) to
// produce the requested data.
class HorizonError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A word that cannot be decoded as a factor of a sigma_i image.
class NotAFactorError : public Error {
 public:
  NotAFactorError(const std::string& what, std::size_t depth)
      : Error(what + " (depth " + std::to_string(depth) + ")"), depth_(depth) {}

  std::size_t depth() const noexcept { return depth_; }

 private:
  std::size_t depth_;
};

}  // namespace ar
