#pragma once

#include "lsa/subspace.hpp"
#include "lsa/superalgebra.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsa {

struct NotNilpotentError : std::domain_error {
  explicit NotNilpotentError(const std::string& what) : std::domain_error(what) {}
};

struct CentralSeries {
  std::vector<GradedSubspace> series;  // C^0, C^1, ... up to stabilization
  std::optional<int> nilindex;         // nullopt: stabilized at a nonzero subspace
  std::vector<int> dims() const;
};

// C^0 = L, C^{k+1} = [C^k, L]; stops at the first repeat, which happens
// within total_dim + 1 steps.
CentralSeries central_series(const SuperAlgebra& a);

struct GradedCentralSeries {
  std::vector<GradedSubspace> series0;  // C^k(L_0)
  std::vector<GradedSubspace> series1;  // C^k(L_1)
  std::pair<int, int> sNilindex;
  std::vector<int> dims0() const;
  std::vector<int> dims1() const;
};

// C^0(L_i) = L_i, C^{k+1}(L_i) = [C^k(L_i), L_0]. Requires a nilpotent law.
GradedCentralSeries graded_central_series(const SuperAlgebra& a);

enum class AnnihilatorKind { Right, Left, Center };

// Right = {x : [L,x] = 0}, Left = {x : [x,L] = 0}, Center = their
// intersection; all graded, computed as kernels of stacked linear systems.
GradedSubspace annihilator(const SuperAlgebra& a, AnnihilatorKind kind);

// Ascending chain of iterated kernels inside L_1:
//   V_1 = {v : [v, L_0] = 0},  V_{k+1} = {v : [v, L_0] subset of V_k},
// returned up to and including the first V_k = L_1. Requires nilpotency.
std::vector<GradedSubspace> engel_flag(const SuperAlgebra& a);

// Jordan-type invariant: two weakly decreasing partitions of n and m.
struct CharSequence {
  std::vector<int> evenPart;
  std::vector<int> oddPart;
  bool operator==(const CharSequence& other) const = default;
  std::string str() const;
};

// Lexicographic order on partitions.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b);

// Maximizes the Jordan partitions of R_X on L_0 and on L_1 over candidates
// X outside [L_0,L_0]: all basis vectors, all pairwise sums, plus
// sampleCount seeded pseudo-random even vectors. Deterministic given seed.
// Throws NotNilpotentError when a sampled operator is not nilpotent, and
// std::invalid_argument when n = 0.
CharSequence char_sequence(const SuperAlgebra& a, int sampleCount, std::uint64_t seed);

enum class Shape { ZeroFiliform, Filiform, Other };

std::string to_string(Shape s);

// ZeroFiliform iff s-nilindex = (n,m); Filiform iff (n-1,m).
Shape classify_shape(const SuperAlgebra& a);

inline constexpr int kCharSeqDefaultSamples = 8;
inline constexpr std::uint64_t kCharSeqDefaultSeed = 8601;

struct InvariantProfile {
  std::optional<int> nilindex;                     // nullopt: not nilpotent
  std::optional<std::pair<int, int>> sNilindex;    // defined for nilpotent laws
  std::vector<int> seriesDims;                     // dim C^s until stabilization
  std::vector<int> gradedSeriesDims0, gradedSeriesDims1;
  int dimRightAnn = 0, dimLeftAnn = 0, dimCenter = 0;
  std::optional<CharSequence> charSeq;
  int charSeqSamples = kCharSeqDefaultSamples;
  std::uint64_t charSeqSeed = kCharSeqDefaultSeed;
  bool isLie = false;
  Shape shape = Shape::Other;
};

InvariantProfile invariant_profile(const SuperAlgebra& a,
                                   int sampleCount = kCharSeqDefaultSamples,
                                   std::uint64_t seed = kCharSeqDefaultSeed);

struct DistinguishWitness {
  std::string invariantName;
  std::string valueA, valueB;
};

// First differing profile field in the fixed order: dimRightAnn, dimLeftAnn,
// dimCenter, nilindex, sNilindex, seriesDims, gradedSeriesDims, charSeq,
// isLie, shape. nullopt means "not separated by these invariants".
std::optional<DistinguishWitness> distinguish(const SuperAlgebra& a, const SuperAlgebra& b);
std::optional<DistinguishWitness> distinguish_profiles(const InvariantProfile& pa,
                                                       const InvariantProfile& pb);

struct ClosureViolation {
  std::string condition;  // "series", "rightAnn", "leftAnn", "center"
  std::string detail;
};

// Each violated condition certifies that mu is not in the closure of the
// basis-change orbit of lambda; an empty list is inconclusive.
std::vector<ClosureViolation> closure_obstruction(const SuperAlgebra& lambda,
                                                  const SuperAlgebra& mu);

}  // namespace lsa
