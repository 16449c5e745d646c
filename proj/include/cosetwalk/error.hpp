#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosetwalk {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Group closure exceeded the enumeration cap; carries the count reached.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

class SubgroupError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

class ReducibleChainError : public Error {
 public:
  using Error::Error;
};

class NotReversibleError : public Error {
 public:
  using Error::Error;
};

class IrrationalSpectrumError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosetwalk
