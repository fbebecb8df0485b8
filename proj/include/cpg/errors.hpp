#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

// Raised whenever an enumeration would exceed a configured limit. `cap_name`
// is the name used in reports ("max-order", "max-subgroups", "max-pairs").
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::size_t cap)
      : Error(cap_name + " cap of " + std::to_string(cap) + " exceeded"),
        cap_name_(std::move(cap_name)),
        cap_(cap) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

class ClosureCapExceeded : public CapExceeded {
 public:
  explicit ClosureCapExceeded(std::size_t cap) : CapExceeded("max-order", cap) {}
};

class LatticeCapExceeded : public CapExceeded {
 public:
  explicit LatticeCapExceeded(std::size_t cap) : CapExceeded("max-subgroups", cap) {}
};

class SearchCapExceeded : public CapExceeded {
 public:
  explicit SearchCapExceeded(std::size_t cap) : CapExceeded("max-pairs", cap) {}
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class TrivialGroup : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace cpg
