#pragma once

#include <stdexcept>
#include <string>

namespace hf {

// One exception type per failure class named in the module contracts.
// `code()` is stable and machine-readable; `what()` carries detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define HF_ERROR_TYPE(Name)                                   \
  class Name : public Error {                                 \
  public:                                                     \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  }

HF_ERROR_TYPE(DuplicateCrossing);
HF_ERROR_TYPE(MissingCrossing);
HF_ERROR_TYPE(DisconnectedMap);
HF_ERROR_TYPE(NonIntegerGenus);
HF_ERROR_TYPE(NotCoprime);
HF_ERROR_TYPE(UnpointedFace);
HF_ERROR_TYPE(SchemaError);
HF_ERROR_TYPE(LemmaViolation);
HF_ERROR_TYPE(NotNice);
HF_ERROR_TYPE(NotInLattice);
HF_ERROR_TYPE(NoConnectingDomain);
HF_ERROR_TYPE(NotAChainComplex);
HF_ERROR_TYPE(NotUnivariate);
HF_ERROR_TYPE(PreconditionFailed);
HF_ERROR_TYPE(InvarianceViolation);
HF_ERROR_TYPE(TooLarge);
HF_ERROR_TYPE(AdditivityViolation);

#undef HF_ERROR_TYPE

}  // namespace hf
