#pragma once

#include <stdexcept>
#include <string>

namespace qbell {

/// A dense operator would exceed the configured qubit cap (see dense_qubit_cap()).
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix or string dimensions do not match the operation's requirements.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A scalar argument lies outside its admissible range.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A site partition is overlapping, gapped, or out of order.
class PartitionError : public std::invalid_argument {
 public:
  explicit PartitionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A correlation table does not cover every required setting string.
class IncompleteDataError : public std::invalid_argument {
 public:
  explicit IncompleteDataError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qbell
