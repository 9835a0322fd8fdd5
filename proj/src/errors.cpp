#include "abc/errors.hpp"

namespace abc {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Config: return "config";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::Supercritical: return "supercritical";
    case ErrorCode::InadmissibleQuantumNumber: return "inadmissible_quantum_number";
    case ErrorCode::ZeroCoupling: return "zero_coupling";
    case ErrorCode::QuadratureFailure: return "quadrature_failure";
    case ErrorCode::ForwardSingularity: return "forward_singularity";
  }
  return "unknown";
}

}  // namespace abc
