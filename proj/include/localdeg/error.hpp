#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace localdeg {

enum class Errc {
  InvalidArgument,
  CapExceeded,
  NonAssociative,
  NoIdentity,
  NoInverse,
  NotLatinSquare,
  NotNormal,
  NotAbelian,
  NoRootOfUnity,
  GroupMismatch,
  NoEmbedding,
  ParameterMismatch,
  UnsupportedDegree,
  Ramified,
  SearchExhausted,
  NoCubeRoot,
  DivisionFailure,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure in the library is reported through this type; `code()` names
// the violated precondition or axiom.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace localdeg
