#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trigsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside a formula's validity domain. The message names the clause.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An argument sits on a pole. index is the digamma pole (0, -1, ...) or the term index l.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::int64_t index) : Error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace trigsum
