#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Every suite is seeded and deterministic.

#include <cstdint>
#include <string>

namespace props {

struct Result {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t attempts = 0;
  std::string first_failure;

  [[nodiscard]] bool ok(std::size_t wanted) const { return failures == 0 && cases >= wanted; }
};

// Polytopes with k <= 3, n <= 8, normal entries and offsets in [-3, 3].
Result embedded_iff_delzant(std::uint64_t seed, std::size_t cases);
Result fano_iff_monotone(std::uint64_t seed, std::size_t cases);
Result gale_round_trip(std::uint64_t seed, std::size_t cases);
Result maslov_unimodular_invariance(std::uint64_t seed, std::size_t cases);
Result normal_form_identities(std::uint64_t seed, std::size_t cases);

// Every regular configuration of up to max_classes primitive directions in
// {-2..2}^2 with multiplicities 1..max_mult; cases counts configurations.
Result merge_order_oracle(std::size_t max_classes, std::size_t max_mult);

}  // namespace props
