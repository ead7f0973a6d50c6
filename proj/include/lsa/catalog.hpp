#pragma once

#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lsa::catalog {

using ParamMap = std::map<std::string, Rational>;

struct ParamSpec {
  std::string name;
  std::string domainNote;   // e.g. "alpha in Q", "alpha != 0", "defaults to 0"
  bool required = true;
};

// Values claimed for the entry by its source table; unstated fields stay
// empty. Bounds carry the inequality-style claims ("dim below 4", "at most m").
struct ExpectedProfile {
  std::optional<int> nilindex;
  std::optional<int> maxNilindex;
  std::optional<Shape> shape;
  std::optional<int> dimRightAnn, dimLeftAnn, dimCenter;
  std::optional<int> minRightAnn, maxRightAnn;
  std::map<int, int> seriesDims;  // s -> dim C^s
};

struct CatalogError : std::invalid_argument {
  explicit CatalogError(const std::string& what) : std::invalid_argument(what) {}
};

struct Entry {
  std::string name;
  std::string dimConstraints;            // human-readable rule for (n,m)
  std::vector<ParamSpec> params;
  std::string note;
};

const std::vector<Entry>& entries();
const Entry& entry(const std::string& name);

// Builds the exact structure constants of the named family. For zf_n1_2,
// zf_n1_3 and R_conj the n argument is the family index (even dimension is
// n+1); every other entry takes the literal type dimensions (dim L0, dim L1).
// Throws CatalogError on unknown names, dimension-constraint violations and
// unbound or out-of-domain parameters.
SuperAlgebra build(const std::string& name, int n, int m, const ParamMap& params = {});

ExpectedProfile expected_profile(const std::string& name, int n, int m,
                                 const ParamMap& params = {});

// Leibniz superalgebra from an associative law and a degree-0 map D obeying
// D(a(Db)) = (Da)(Db) = D((Da)b): the bracket a(Db) - (-1)^{deg a deg b}(Db)a.
// Throws std::invalid_argument naming the first failing pair if the
// D-condition does not hold, and asserts the result has no identity defects.
SuperAlgebra from_associative_derivation(const SuperAlgebra& assoc, const Matrix& evenD,
                                         const Matrix& oddD);

struct RegisteredDegeneration {
  std::string source;
  int n, m;
  ParamMap sourceParams;
  ScalingFamily scaling;
  std::string target;
  ParamMap targetParams;
};

const std::vector<RegisteredDegeneration>& degeneration_registry();

struct VerifyCheck {
  std::string entry;
  std::string check;
  bool pass = false;
  bool informational = false;  // recorded, never counted as failure
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  int passed = 0, failed = 0, informational = 0;
};

inline const std::vector<Rational> kDefaultParamSamples = {
    Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(2)};

// Runs every entry (or one, by name) over its dimension samples and
// domain-filtered parameter samples: identity defects must be empty, the
// computed profile must match every expected value, registered degenerations
// must land exactly on their targets, and the bracket-chain/membership
// properties of the odd-dimension-3 tables must hold. Pairwise distinguish
// results inside each family table are recorded as informational.
VerifyReport verify(const std::string& scope = "all",
                    const std::vector<Rational>& paramSamples = kDefaultParamSamples);

// Instantiations of one entry used by verify: dimension samples plus
// domain-filtered parameter bindings.
std::vector<std::pair<std::pair<int, int>, ParamMap>> verify_instances(
    const std::string& name, const std::vector<Rational>& paramSamples);

}  // namespace lsa::catalog
