#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cardmetric {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation would have to enumerate an infinite group.
class InfiniteEnumeration : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t size, std::size_t bound)
      : Error(what + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::size_t size() const { return size_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

class RadiusCapExceeded : public Error {
 public:
  explicit RadiusCapExceeded(std::size_t cap)
      : Error("radius cap exceeded: element not reached within radius " +
              std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid generating sequence. `generator_index` names the offending entry
/// when one can be singled out.
class InvalidGenerators : public Error {
 public:
  InvalidGenerators(const std::string& what,
                    std::optional<std::size_t> generator_index = std::nullopt)
      : Error(generator_index ? "generator " + std::to_string(*generator_index) +
                                    ": " + what
                              : what),
        index_(generator_index) {}

  std::optional<std::size_t> generator_index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

/// Text parse failure with the 0-based character offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class VertexNotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace cardmetric
