#pragma once

#include <stdexcept>
#include <string>

namespace qm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrincipalImaginaryQuadratic : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct ZeroModulus : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct GridTooSmall : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct ToleranceUnreachable : Error { using Error::Error; };

}  // namespace qm
