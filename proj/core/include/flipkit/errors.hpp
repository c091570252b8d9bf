#pragma once

#include <stdexcept>
#include <string>

namespace flipkit {

// Structured error codes. The CLI maps these onto exit codes:
// format/read problems -> 1, domain violations -> 2, budget -> 3.
enum class Errc {
  // map validation
  NotInvolution,
  FixedPoint,
  EdgeOrbitNot4,
  FaceOrbitNot6,
  Disconnected,
  // simplicial loader
  NonPseudomanifold,
  RepeatedVertexInFace,
  NotRegular,
  // handles and moves
  InvalidHandle,
  FlipBlocked,
  ContractBlocked,
  // scripts
  AddressOutOfRange,
  StartKeyMismatch,
  EndKeyMismatch,
  NonRegularFlipInRegularScript,
  // gadgets
  GadgetFailed,
  LiftNotFound,
  // search
  NotConnected,
  Exhausted,
  NoSeedAvailable,
  // io / misc
  BadFormat,
  PreconditionFailed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& msg);

}  // namespace flipkit
