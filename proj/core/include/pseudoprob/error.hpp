#pragma once

#include <stdexcept>
#include <string>

namespace pseudoprob {

// Every failure raised by the library carries a short machine-readable code
// ("dim-mismatch", "not-a-projector", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* kDimMismatch = "dim-mismatch";
inline constexpr const char* kNonFinite = "non-finite";
inline constexpr const char* kNotHermitian = "not-hermitian";
inline constexpr const char* kEigNoConvergence = "eig-no-convergence";
inline constexpr const char* kNonHermitianTrace = "non-hermitian-trace";
inline constexpr const char* kUnphysicalBloch = "unphysical-bloch";
inline constexpr const char* kInvalidDirection = "invalid-direction";
inline constexpr const char* kInvalidOutcome = "invalid-outcome";
inline constexpr const char* kInvalidDensity = "invalid-density";
inline constexpr const char* kInvalidObservable = "invalid-observable";
inline constexpr const char* kNotAProjector = "not-a-projector";
inline constexpr const char* kOrderingExplosion = "ordering-explosion";
inline constexpr const char* kInvalidConvexWeights = "invalid-convex-weights";
inline constexpr const char* kInvalidRecipe = "invalid-recipe";
inline constexpr const char* kInvalidArgument = "invalid-argument";
inline constexpr const char* kInvalidSubset = "invalid-subset";
inline constexpr const char* kNotNormalized = "not-normalized";
inline constexpr const char* kPartitionSearchTooLarge = "partition-search-too-large";
inline constexpr const char* kInvalidSubsystem = "invalid-subsystem";
inline constexpr const char* kOutOfRange = "out-of-range";
inline constexpr const char* kParse = "parse-error";
}  // namespace errc

}  // namespace pseudoprob
