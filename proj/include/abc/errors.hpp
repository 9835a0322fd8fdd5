#pragma once

#include <stdexcept>
#include <string>

namespace abc {

enum class ErrorCode {
  Config = 1,
  Domain,
  Pole,
  NoConvergence,
  Supercritical,
  InadmissibleQuantumNumber,
  ZeroCoupling,
  QuadratureFailure,
  ForwardSingularity,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define ABC_DECLARE_ERROR(Name, Code)                                  \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

ABC_DECLARE_ERROR(ConfigError, Config)
ABC_DECLARE_ERROR(DomainError, Domain)
ABC_DECLARE_ERROR(PoleError, Pole)
ABC_DECLARE_ERROR(NoConvergence, NoConvergence)
ABC_DECLARE_ERROR(SupercriticalError, Supercritical)
ABC_DECLARE_ERROR(InadmissibleQuantumNumber, InadmissibleQuantumNumber)
ABC_DECLARE_ERROR(ZeroCouplingError, ZeroCoupling)
ABC_DECLARE_ERROR(QuadratureFailure, QuadratureFailure)
ABC_DECLARE_ERROR(ForwardSingularity, ForwardSingularity)

#undef ABC_DECLARE_ERROR

}  // namespace abc
