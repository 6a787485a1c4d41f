#pragma once

#include <stdexcept>
#include <string>

namespace gridpark {

enum class Errc {
  EmptyConfiguration,
  NotAParkingNode,
  NoTotalOrder,
  GuardUndefined,
  NotApplicable,
  NotARobot,
  NoCandidate,
  TooLarge,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace gridpark
