#ifndef NSLEN_LIMITS_HPP
#define NSLEN_LIMITS_HPP

#include <cstdint>
#include <string>

namespace nslen {

/// Size thresholds gating the tiered operations. Exceeding any of them is an
/// error (TierExceeded / LatticeCapExceeded), never a silent downgrade.
struct Limits {
  // tier E: element enumeration, class representatives, centralizers
  std::uint64_t max_enumerable = 1'000'000;
  // tier S: normal-subgroup lattice, minimal generator count
  std::uint64_t max_small = 10'000;
  std::uint64_t lattice_cap = 10'000;
  // largest index allowed for a coset action
  std::uint64_t quotient_cap = 100'000;
  // above this order the two-generator scan falls back to sampling
  std::uint64_t max_exhaustive = 5040;
  std::uint64_t default_samples = 10'000;
};

const Limits &default_limits();

enum class Tier { ChainOnly, Enumerable, Small };

std::string to_string(Tier tier);

} // namespace nslen

#endif // NSLEN_LIMITS_HPP
