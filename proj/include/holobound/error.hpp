#pragma once

#include <stdexcept>
#include <string>

namespace holobound {

/// Broad category of a library failure. The CLI maps these onto exit codes.
enum class ErrorKind {
  domain,    // a precondition on the mathematical input was violated
  resource,  // a configured cap (field size, group order, precision) was hit
};

/// The single exception type thrown by the library. `code` is a stable,
/// machine-readable identifier such as "chern.mu2_nonzero_c1".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void domain_error(std::string code, const std::string& message) {
  throw Error(ErrorKind::domain, std::move(code), message);
}

[[noreturn]] inline void resource_error(std::string code, const std::string& message) {
  throw Error(ErrorKind::resource, std::move(code), message);
}

}  // namespace holobound
