#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mbb {

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Randomized self-checks of the library (division identity, the three-way
/// agreement of the basis criteria, border basis vs. Gröbner path, ...).
std::vector<PropertyOutcome> run_properties(std::uint64_t seed,
                                            std::size_t cases);

} // namespace mbb
