// Cross-cutting properties checked on randomized laws and catalog entries.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsa/adapted.hpp"
#include "lsa/catalog.hpp"
#include "lsa/invariants.hpp"
#include "lsa/subspace.hpp"
#include "test_support.hpp"

#include <random>

using namespace lsa;
namespace cat = lsa::catalog;

namespace {

std::vector<SuperAlgebra> sample_laws() {
  std::vector<SuperAlgebra> out;
  out.push_back(cat::build("zf_3_3.mu12", 3, 3));
  out.push_back(cat::build("zf_n1_2.mu3", 4, 2));
  out.push_back(cat::build("R43", 4, 3));
  out.push_back(cat::build("R32", 3, 2));
  out.push_back(cat::build("thm312", 3, 4));
  out.push_back(cat::build("zf_2_m.muK", 2, 5, {{"k", 2}}));
  out.push_back(cat::build("filiform_II", 5, 2, {{"gamma", 1}, {"beta3", Rational(1, 2)}}));
  out.push_back(cat::build("R_conj", 4, 4));
  return out;
}

}  // namespace

TEST_CASE("the two identity formulations agree on arbitrary laws") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SuperAlgebra law = testing::random_law(2, 2, 77 + seed);
    CHECK(leibniz_defects(law).empty() == operator_identity_defects(law).empty());
  }
  for (const auto& law : sample_laws()) {
    CHECK(leibniz_defects(law).empty());
    CHECK(operator_identity_defects(law).empty());
  }
}

TEST_CASE("profiles are invariant under basis changes") {
  std::uint64_t seed = 500;
  for (const auto& law : sample_laws()) {
    const auto before = invariant_profile(law);
    for (int trial = 0; trial < 2; ++trial) {
      const auto g = testing::random_invertible_map(law.even_dim(), law.odd_dim(), ++seed);
      const auto after = invariant_profile(apply_basis_change(law, g));
      CHECK(before.nilindex == after.nilindex);
      CHECK(before.sNilindex == after.sNilindex);
      CHECK(before.seriesDims == after.seriesDims);
      CHECK(before.gradedSeriesDims0 == after.gradedSeriesDims0);
      CHECK(before.gradedSeriesDims1 == after.gradedSeriesDims1);
      CHECK(before.dimRightAnn == after.dimRightAnn);
      CHECK(before.dimLeftAnn == after.dimLeftAnn);
      CHECK(before.dimCenter == after.dimCenter);
      CHECK(before.charSeq == after.charSeq);
      CHECK(before.isLie == after.isLie);
      CHECK(before.shape == after.shape);
    }
  }
}

TEST_CASE("nilpotency forces nilpotent right multiplications") {
  std::mt19937_64 rng(4242);
  for (const auto& law : sample_laws()) {
    REQUIRE(central_series(law).nilindex.has_value());
    for (int trial = 0; trial < 50; ++trial) {
      GradedVector x = GradedVector::zero(law.even_dim(), law.odd_dim());
      const bool even = trial % 2 == 0 && law.even_dim() > 0;
      auto& coords = even ? x.even : x.odd;
      for (auto& c : coords) c = testing::random_rational(rng);
      if (x.is_zero()) continue;
      const Matrix r = law.right_mul_matrix(x);
      CHECK_NOTHROW(nilpotent_jordan_partition(r));
    }
  }
}

TEST_CASE("even squares land in the right annihilator") {
  for (const auto& law : sample_laws()) {
    const auto z = annihilator(law, AnnihilatorKind::Right);
    for (std::size_t i = 0; i < law.even_dim(); ++i) {
      const GradedVector x = law.basis_vector({0, i});
      CHECK(member(z, law.bracket(x, x)));
    }
  }
}

TEST_CASE("series nest and dimensions weakly decrease") {
  for (const auto& law : sample_laws()) {
    const auto series = central_series(law);
    for (std::size_t k = 0; k + 1 < series.series.size(); ++k) {
      CHECK(series.series[k].contains(series.series[k + 1]));
      CHECK(series.series[k].dim() >= series.series[k + 1].dim());
    }
    const auto graded = graded_central_series(law);
    for (std::size_t k = 0; k < graded.series0.size(); ++k) {
      if (k < series.series.size()) {
        // C^k(L0) sits inside the even part of C^k(L).
        CHECK(series.series[k].contains(graded.series0[k]));
      }
    }
  }
}

TEST_CASE("engel flags absorb the even action and reach the odd part") {
  for (const auto& law : sample_laws()) {
    if (law.odd_dim() == 0) continue;
    const auto flag = engel_flag(law);
    REQUIRE_FALSE(flag.empty());
    CHECK(flag.back().dim() == static_cast<int>(law.odd_dim()));
    const GradedSubspace evenWhole{Matrix::identity(law.even_dim()),
                                   Matrix(0, law.odd_dim())};
    for (std::size_t k = 0; k + 1 < flag.size(); ++k)
      CHECK(flag[k].contains(product_subspace(law, flag[k + 1], evenWhole)));
  }
}

TEST_CASE("realized degenerations respect the closed-set inequalities") {
  for (const auto& reg : cat::degeneration_registry()) {
    const SuperAlgebra source = cat::build(reg.source, reg.n, reg.m, reg.sourceParams);
    const auto result = degeneration_limit(source, reg.scaling);
    if (result.diverged()) continue;
    const SuperAlgebra& limit = *result.limit;

    const auto dimsA = central_series(source).dims();
    const auto dimsB = central_series(limit).dims();
    const std::size_t len = std::max(dimsA.size(), dimsB.size());
    auto at = [](const std::vector<int>& v, std::size_t s) {
      return s < v.size() ? v[s] : v.back();
    };
    for (std::size_t s = 0; s < len; ++s) CHECK(at(dimsB, s) <= at(dimsA, s));

    for (auto kind : {AnnihilatorKind::Right, AnnihilatorKind::Left, AnnihilatorKind::Center})
      CHECK(annihilator(limit, kind).dim() >= annihilator(source, kind).dim());
  }
}

TEST_CASE("odd-square chain identity on the odd-dimension-3 tables") {
  const std::vector<std::pair<std::string, std::pair<int, int>>> picks = {
      {"zf_2_3.mu6", {2, 3}}, {"zf_3_3.mu12", {3, 3}}, {"zf_4_3.mu12", {4, 3}},
      {"zf_n1_3.mu6", {5, 3}}, {"R43", {4, 3}}};
  for (const auto& [name, dims] : picks) {
    const SuperAlgebra law = cat::build(name, dims.first, dims.second);
    const auto y1 = *law.find_label("Y1");
    const auto y3 = *law.find_label("Y3");
    const GradedVector x0 = law.basis_vector(*law.find_label("X0"));
    GradedVector chain = law.bracket_basis(y1, y1);
    for (int step = 0; step < 4; ++step) chain = law.bracket(chain, x0);
    CHECK(law.bracket_basis(y3, y3) == chain * Rational(1, 6));
  }
}

TEST_CASE("adapted-basis recovery round-trips on scrambled chain laws") {
  std::uint64_t seed = 900;
  for (const auto& name : {"zf_model", "zf_n1_2.mu1", "zf_2_3.mu6"}) {
    SuperAlgebra law = std::string(name) == "zf_model"
                           ? cat::build(name, 4, 2)
                           : std::string(name) == "zf_n1_2.mu1"
                                 ? cat::build(name, 3, 2, {{"alpha", Rational(1, 2)}})
                                 : cat::build(name, 2, 3);
    for (int trial = 0; trial < 3; ++trial) {
      const auto g = testing::random_invertible_map(law.even_dim(), law.odd_dim(), ++seed);
      const SuperAlgebra hidden = apply_basis_change(law, g);
      const SuperAlgebra recovered =
          apply_basis_change(hidden, adapted_basis_zf(hidden));
      CHECK(satisfies_zf_relations(recovered));
    }
  }
}
