#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n exceeds kMaxVertices.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Index undefined for the input (Wiener / degree distance on a disconnected graph).
class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Thrown when a transformation receives an instance whose hypotheses were not validated.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "precondition violated:";
    for (const auto& s : v) out += " [" + s + "]";
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace rdd
