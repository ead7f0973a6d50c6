#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsa/adapted.hpp"
#include "lsa/catalog.hpp"
#include "test_support.hpp"

using namespace lsa;
namespace cat = lsa::catalog;

TEST_CASE("an already adapted law satisfies the relations after recovery") {
  const SuperAlgebra model = cat::build("zf_model", 4, 3);
  CHECK(satisfies_zf_relations(model));
  const GradedMap g = adapted_basis_zf(model);
  CHECK(satisfies_zf_relations(apply_basis_change(model, g)));
}

TEST_CASE("recovery after a known scrambling") {
  const SuperAlgebra mu2 = cat::build("zf_n1_2.mu2", 3, 2);
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const GradedMap scramble = testing::random_invertible_map(4, 2, seed);
    const SuperAlgebra hidden = apply_basis_change(mu2, scramble);
    const GradedMap g = adapted_basis_zf(hidden);
    CHECK(satisfies_zf_relations(apply_basis_change(hidden, g)));
  }

  const SuperAlgebra mu6 = cat::build("zf_2_3.mu6", 2, 3);
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    const GradedMap scramble = testing::random_invertible_map(2, 3, seed);
    const SuperAlgebra hidden = apply_basis_change(mu6, scramble);
    const GradedMap g = adapted_basis_zf(hidden);
    CHECK(satisfies_zf_relations(apply_basis_change(hidden, g)));
  }
}

TEST_CASE("recovery leaves the law isomorphic (same invariants)") {
  const SuperAlgebra mu12 = cat::build("zf_3_3.mu12", 3, 3);
  const SuperAlgebra hidden =
      apply_basis_change(mu12, testing::random_invertible_map(3, 3, 31));
  const SuperAlgebra recovered = apply_basis_change(hidden, adapted_basis_zf(hidden));
  CHECK_FALSE(distinguish(mu12, recovered).has_value());
}

TEST_CASE("rejects laws that are not zero-filiform") {
  CHECK_THROWS_AS(adapted_basis_zf(cat::build("R43", 4, 3)), std::invalid_argument);
  CHECK_THROWS_AS(adapted_basis_zf(SuperAlgebra(0, 2)), std::invalid_argument);

  SuperAlgebra notNilpotent(1, 1);
  GradedVector v = GradedVector::zero(1, 1);
  v.even[0] = 1;
  notNilpotent.set_product({0, 0}, {0, 0}, v);
  CHECK_THROWS(adapted_basis_zf(notNilpotent));
}
