#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lta {

/// Base exception for every failure raised by the library.
///
/// `kind()` is a stable CamelCase tag (e.g. "DuplicateProduct",
/// "NotIdempotent") that the command-line front end prints verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace lta
