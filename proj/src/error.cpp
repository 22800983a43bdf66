#include "nslen/error.hpp"
#include "nslen/limits.hpp"

namespace nslen {

const char *to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::Parse: return "ParseError";
  case ErrorKind::DegreeMismatch: return "DegreeMismatch";
  case ErrorKind::TierExceeded: return "TierExceeded";
  case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
  case ErrorKind::NotSubgroup: return "NotSubgroup";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::NotPermuted: return "NotPermuted";
  case ErrorKind::NotSoluble: return "NotSoluble";
  case ErrorKind::NotSemisimple: return "NotSemisimple";
  case ErrorKind::NotInGroup: return "NotInGroup";
  case ErrorKind::TrivialGroup: return "TrivialGroup";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

const Limits &default_limits()
{
  static const Limits limits{};
  return limits;
}

std::string to_string(Tier tier)
{
  switch (tier) {
  case Tier::ChainOnly: return "chain-only";
  case Tier::Enumerable: return "enumerable";
  case Tier::Small: return "small";
  }
  return "unknown";
}

} // namespace nslen
