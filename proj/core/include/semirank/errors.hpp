#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semirank {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructor or operation was called with arguments outside its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A configured search or enumeration limit would be exceeded.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::string guard, std::uint64_t requested, std::uint64_t limit)
      : Error("guard '" + guard + "' exceeded: requested " +
              std::to_string(requested) + ", limit " + std::to_string(limit)),
        guard_(std::move(guard)),
        requested_(requested),
        limit_(limit) {}

  std::string const& guard() const noexcept { return guard_; }
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string guard_;
  std::uint64_t requested_;
  std::uint64_t limit_;
};

// Malformed Cayley table input (bad entries, bad file syntax, non-associative).
class TableError : public Error {
 public:
  using Error::Error;
};

class GroupError : public Error {
 public:
  using Error::Error;
};

class NoProperPrimeSubset : public Error {
 public:
  NoProperPrimeSubset()
      : Error("a semigroup of order 1 has no proper nonempty prime subset") {}
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace semirank
