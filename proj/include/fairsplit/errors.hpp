#pragma once

#include <stdexcept>
#include <string>

namespace fairsplit {

/// Malformed or inconsistent input (bad labels, overlapping sets, wrong sizes).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Some search or enumeration budget ran out before a verdict was reached.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A pluggable stage returned output that failed re-verification.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairsplit
