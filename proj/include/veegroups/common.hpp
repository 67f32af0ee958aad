#pragma once

#include <stdexcept>
#include <string>

namespace veegroups {

// Hard limits shared across the library.
//
// Generator indices are 1-based and generator i occupies bit i-1 of a subset
// mask, so signatures are capped at the mask word width. Operations that
// enumerate all 2^(n+1) group elements (tables, character matrices, class
// lists, ...) refuse to run past kEnumerationCap.
inline constexpr int kMaxGenerators = 64;
inline constexpr int kEnumerationCap = 20;

// Backtracking isomorphism search is exact but exponential; keep it desk-scale.
inline constexpr int kIsoOracleCap = 512;

// Construction-time validation runs exhaustive pairwise checks up to this
// order (associativity uses Light's test over the generating set; the full
// cubic scan only runs for |G| <= 512).
inline constexpr int kValidationCap = 4096;

// Thrown when an operation would enumerate past the documented caps. The CLI
// maps this to its own exit code, distinct from usage errors.
class size_cap_error : public std::runtime_error {
 public:
  explicit size_cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace veegroups
