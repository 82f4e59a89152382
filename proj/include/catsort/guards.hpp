#pragma once

// Resource guards for the exhaustive kernels. Every guard is a defaulted
// parameter so callers (and the CLI --limit flag) can raise it explicitly.

#include <span>
#include <stdexcept>

namespace catsort {

class Perm;

struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kFertilityGuardN = 11;    // brute force / census over S_n
inline constexpr int kUniqueEnumGuardK = 5;    // unrestricted scan of S_{2k+1}
inline constexpr int kIntervalScanGuardK = 9;  // pairwise C_k^2 interval scans

/// Default max_k for sequence computation: 5 with no patterns (full S_{2k+1}
/// scan), 6 otherwise.
int sequence_guard_k(std::span<const Perm> pats);

}  // namespace catsort
