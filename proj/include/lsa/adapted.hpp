#pragma once

#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"

#include <cstdint>

namespace lsa {

inline constexpr std::uint64_t kAdaptedDefaultSeed = 3071;

// For a nilpotent zero-filiform law, returns an invertible graded map g such
// that apply_basis_change(a, g) satisfies exactly the chain relations
//   [X_i,X_0] = X_{i+1} (i < n-1), [X_{n-1},X_0] = 0,
//   [Y_j,X_0] = Y_{j+1} (j < m),  [Y_m,X_0] = 0,
//   [Y_j,X_k] = 0 for k >= 1, and all other purely even products zero.
// Mixed products [X_i,Y_j] and odd squares [Y_i,Y_j] are not normalized.
//
// Generators are searched deterministically (basis vectors, then pairwise
// sums, then seeded random vectors); the first chain generator wins.
// Throws NotNilpotentError / std::invalid_argument when the law is not
// zero-filiform, std::runtime_error when no chain generator is found.
GradedMap adapted_basis_zf(const SuperAlgebra& a, std::uint64_t seed = kAdaptedDefaultSeed);

// True iff the law satisfies the relations listed above on the nose.
bool satisfies_zf_relations(const SuperAlgebra& a);

}  // namespace lsa
