#pragma once

#include <stdexcept>
#include <string>

namespace padicdx {

/// Base of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  /// Stable identifier used in JSON error reports.
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Mathematical precondition failures (exit code 2 on the command line).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or configuration (exit code 1 on the command line).
class InputError : public Error {
 public:
  using Error::Error;
};

#define PADICDX_DOMAIN_ERROR(Name)                                   \
  class Name : public DomainError {                                  \
   public:                                                           \
    explicit Name(const std::string& what) : DomainError(#Name, what) {} \
  }

PADICDX_DOMAIN_ERROR(NegativeValuation);
PADICDX_DOMAIN_ERROR(ZeroInput);
PADICDX_DOMAIN_ERROR(NormTooLarge);
PADICDX_DOMAIN_ERROR(NotAUnit);
PADICDX_DOMAIN_ERROR(ZeroOperator);
PADICDX_DOMAIN_ERROR(TruncatedOperand);
PADICDX_DOMAIN_ERROR(BadLevels);
PADICDX_DOMAIN_ERROR(NotInvertibleHere);
PADICDX_DOMAIN_ERROR(LevelTooSmall);
PADICDX_DOMAIN_ERROR(VariableMismatch);
PADICDX_DOMAIN_ERROR(InvalidArgument);

#undef PADICDX_DOMAIN_ERROR

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError("SyntaxError",
                   what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NegativePowerOutsideMicroMode : public InputError {
 public:
  explicit NegativePowerOutsideMicroMode(std::size_t position)
      : InputError("NegativePowerOutsideMicroMode",
                   "negative power of d requires micro mode at position " +
                       std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ConfigError : public InputError {
 public:
  explicit ConfigError(const std::string& what)
      : InputError("ConfigError", what) {}
};

}  // namespace padicdx
