#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopcoprod {

enum class Errc {
  MalformedTable,
  NoIdentity,
  NonAssociative,
  MissingInverse,
  UnknownElement,
  SpaceMismatch,
  UnsupportedDimension,
  NonHomogeneous,
  TrivialGroup,
  ZeroExponent,
  Unsupported,
  NotAComplex,
  TooLarge,
  SyntaxError,
  UnsupportedKind,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace loopcoprod
