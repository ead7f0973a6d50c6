#include "lsa/invariants.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lsa {

std::vector<int> CentralSeries::dims() const {
  std::vector<int> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

std::vector<int> GradedCentralSeries::dims0() const {
  std::vector<int> out;
  for (const auto& s : series0) out.push_back(s.dim());
  return out;
}

std::vector<int> GradedCentralSeries::dims1() const {
  std::vector<int> out;
  for (const auto& s : series1) out.push_back(s.dim());
  return out;
}

CentralSeries central_series(const SuperAlgebra& a) {
  const GradedSubspace whole = GradedSubspace::full(a.even_dim(), a.odd_dim());
  CentralSeries out;
  out.series.push_back(whole);
  while (true) {
    GradedSubspace next = product_subspace(a, out.series.back(), whole);
    if (next == out.series.back()) break;
    out.series.push_back(std::move(next));
  }
  if (out.series.back().dim() == 0)
    out.nilindex = static_cast<int>(out.series.size()) - 1;
  return out;
}

GradedCentralSeries graded_central_series(const SuperAlgebra& a) {
  if (!central_series(a).nilindex)
    throw NotNilpotentError("graded central series requires a nilpotent law");
  const std::size_t n = a.even_dim(), m = a.odd_dim();
  const GradedSubspace evenWhole{Matrix::identity(n), Matrix(0, m)};

  auto run = [&](GradedSubspace start) {
    std::vector<GradedSubspace> chain{std::move(start)};
    while (chain.back().dim() > 0)
      chain.push_back(product_subspace(a, chain.back(), evenWhole));
    return chain;
  };

  GradedCentralSeries out;
  out.series0 = run(GradedSubspace{Matrix::identity(n), Matrix(0, m)});
  out.series1 = run(GradedSubspace{Matrix(0, n), Matrix::identity(m)});
  out.sNilindex = {static_cast<int>(out.series0.size()) - 1,
                   static_cast<int>(out.series1.size()) - 1};
  return out;
}

GradedSubspace annihilator(const SuperAlgebra& a, AnnihilatorKind kind) {
  const std::size_t n = a.even_dim(), m = a.odd_dim();

  // Conditions on an even unknown x (coords a_j): for every basis element u,
  // [u, x] = 0 (right) and/or [x, u] = 0 (left). Rows are indexed by
  // (basis element, output coordinate); columns by j.
  auto even_conditions = [&](bool right, bool left) {
    std::vector<std::vector<Rational>> rows;
    if (right) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> row(n);
          for (std::size_t j = 0; j < n; ++j) row[j] = a.c(i, j, k);
          rows.push_back(std::move(row));
        }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
          std::vector<Rational> row(n);
          for (std::size_t j = 0; j < n; ++j) row[j] = a.e(i, j, k);
          rows.push_back(std::move(row));
        }
    }
    if (left) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> row(n);
          for (std::size_t i = 0; i < n; ++i) row[i] = a.c(i, j, k);
          rows.push_back(std::move(row));
        }
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          std::vector<Rational> row(n);
          for (std::size_t i = 0; i < n; ++i) row[i] = a.d(i, j, k);
          rows.push_back(std::move(row));
        }
    }
    Matrix system(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) system.set_row(r, rows[r]);
    return kernel(system);
  };

  auto odd_conditions = [&](bool right, bool left) {
    std::vector<std::vector<Rational>> rows;
    if (right) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
          std::vector<Rational> row(m);
          for (std::size_t j = 0; j < m; ++j) row[j] = a.d(i, j, k);
          rows.push_back(std::move(row));
        }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> row(m);
          for (std::size_t j = 0; j < m; ++j) row[j] = a.f(i, j, k);
          rows.push_back(std::move(row));
        }
    }
    if (left) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          std::vector<Rational> row(m);
          for (std::size_t i = 0; i < m; ++i) row[i] = a.e(i, j, k);
          rows.push_back(std::move(row));
        }
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> row(m);
          for (std::size_t i = 0; i < m; ++i) row[i] = a.f(i, j, k);
          rows.push_back(std::move(row));
        }
    }
    Matrix system(rows.size(), m);
    for (std::size_t r = 0; r < rows.size(); ++r) system.set_row(r, rows[r]);
    return kernel(system);
  };

  const bool right = kind != AnnihilatorKind::Left;
  const bool left = kind != AnnihilatorKind::Right;
  return GradedSubspace{even_conditions(right, left), odd_conditions(right, left)};
}

std::vector<GradedSubspace> engel_flag(const SuperAlgebra& a) {
  if (!central_series(a).nilindex)
    throw NotNilpotentError("engel flag requires a nilpotent law");
  const std::size_t n = a.even_dim(), m = a.odd_dim();

  // Action matrices of [. , X_j] on the odd part.
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix mj(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) mj.at(k, i) = a.e(i, j, k);
    action.push_back(std::move(mj));
  }

  std::vector<GradedSubspace> chain;
  Matrix current(0, m);  // V_0 = 0
  while (true) {
    // v in V_{next} iff reduce(M_j v) = 0 for all j.
    std::vector<std::vector<Rational>> rows;
    for (const auto& mj : action) {
      // Columns of the composed map: residue of M_j e_t against `current`.
      Matrix composed(m, m);
      for (std::size_t t = 0; t < m; ++t) {
        std::vector<Rational> col(m);
        for (std::size_t k = 0; k < m; ++k) col[k] = mj.at(k, t);
        const auto residue = reduce_by_row_span(current, col);
        for (std::size_t k = 0; k < m; ++k) composed.at(k, t) = residue[k];
      }
      for (std::size_t k = 0; k < m; ++k) rows.push_back(composed.row(k));
    }
    Matrix system(rows.size(), m);
    for (std::size_t r = 0; r < rows.size(); ++r) system.set_row(r, rows[r]);
    Matrix next = kernel(system);
    chain.push_back(GradedSubspace{Matrix(0, n), next});
    if (next.rows() == m) break;
    if (next.rows() == current.rows())
      throw NotNilpotentError("engel flag did not reach the whole odd part");
    current = std::move(next);
  }
  return chain;
}

std::string CharSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < evenPart.size(); ++i) os << (i ? "," : "") << evenPart[i];
  os << " | ";
  for (std::size_t i = 0; i < oddPart.size(); ++i) os << (i ? "," : "") << oddPart[i];
  os << ")";
  return os.str();
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CharSequence char_sequence(const SuperAlgebra& a, int sampleCount, std::uint64_t seed) {
  const std::size_t n = a.even_dim(), m = a.odd_dim();
  if (n == 0) throw std::invalid_argument("char_sequence requires an even part");

  const GradedSubspace evenWhole{Matrix::identity(n), Matrix(0, m)};
  const GradedSubspace derived = product_subspace(a, evenWhole, evenWhole);

  std::vector<std::vector<Rational>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    candidates.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> v(n);
      v[i] = 1;
      v[j] = 1;
      candidates.push_back(std::move(v));
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  for (int s = 0; s < sampleCount; ++s) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(num(rng), den(rng));
    candidates.push_back(std::move(v));
  }

  std::vector<int> bestEven, bestOdd;
  bool found = false;
  for (const auto& x : candidates) {
    const GradedVector gx{x, std::vector<Rational>(m)};
    if (gx.is_zero() || derived.contains(gx)) continue;
    std::vector<int> even, odd;
    try {
      even = nilpotent_jordan_partition(a.right_mul_even_block(x));
      odd = nilpotent_jordan_partition(a.right_mul_odd_block(x));
    } catch (const std::domain_error&) {
      throw NotNilpotentError("sampled right multiplication is not nilpotent");
    }
    if (!found || lex_less(bestEven, even)) bestEven = even;
    if (!found || lex_less(bestOdd, odd)) bestOdd = odd;
    found = true;
  }
  if (!found)
    throw NotNilpotentError("no candidate outside [L0,L0]; the law is not nilpotent");
  return CharSequence{bestEven, bestOdd};
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::ZeroFiliform: return "ZeroFiliform";
    case Shape::Filiform: return "Filiform";
    default: return "Other";
  }
}

Shape classify_shape(const SuperAlgebra& a) {
  const auto graded = graded_central_series(a);
  const int n = static_cast<int>(a.even_dim()), m = static_cast<int>(a.odd_dim());
  if (graded.sNilindex == std::make_pair(n, m)) return Shape::ZeroFiliform;
  if (graded.sNilindex == std::make_pair(n - 1, m)) return Shape::Filiform;
  return Shape::Other;
}

InvariantProfile invariant_profile(const SuperAlgebra& a, int sampleCount, std::uint64_t seed) {
  InvariantProfile p;
  const CentralSeries series = central_series(a);
  p.nilindex = series.nilindex;
  p.seriesDims = series.dims();
  p.dimRightAnn = annihilator(a, AnnihilatorKind::Right).dim();
  p.dimLeftAnn = annihilator(a, AnnihilatorKind::Left).dim();
  p.dimCenter = annihilator(a, AnnihilatorKind::Center).dim();
  p.isLie = is_lie(a);
  p.charSeqSamples = sampleCount;
  p.charSeqSeed = seed;
  if (series.nilindex) {
    const auto graded = graded_central_series(a);
    p.sNilindex = graded.sNilindex;
    p.gradedSeriesDims0 = graded.dims0();
    p.gradedSeriesDims1 = graded.dims1();
    const int n = static_cast<int>(a.even_dim()), m = static_cast<int>(a.odd_dim());
    if (graded.sNilindex == std::make_pair(n, m))
      p.shape = Shape::ZeroFiliform;
    else if (graded.sNilindex == std::make_pair(n - 1, m))
      p.shape = Shape::Filiform;
    if (a.even_dim() > 0) p.charSeq = char_sequence(a, sampleCount, seed);
  }
  return p;
}

namespace {

std::string dims_str(const std::vector<int>& dims) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ")";
  return os.str();
}

std::string nilindex_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("NotNilpotent");
}

std::string snilindex_str(const std::optional<std::pair<int, int>>& v) {
  if (!v) return "undefined";
  return "(" + std::to_string(v->first) + "," + std::to_string(v->second) + ")";
}

}  // namespace

std::optional<DistinguishWitness> distinguish_profiles(const InvariantProfile& pa,
                                                       const InvariantProfile& pb) {
  auto w = [](std::string name, std::string va, std::string vb) {
    return DistinguishWitness{std::move(name), std::move(va), std::move(vb)};
  };
  if (pa.dimRightAnn != pb.dimRightAnn)
    return w("dimRightAnn", std::to_string(pa.dimRightAnn), std::to_string(pb.dimRightAnn));
  if (pa.dimLeftAnn != pb.dimLeftAnn)
    return w("dimLeftAnn", std::to_string(pa.dimLeftAnn), std::to_string(pb.dimLeftAnn));
  if (pa.dimCenter != pb.dimCenter)
    return w("dimCenter", std::to_string(pa.dimCenter), std::to_string(pb.dimCenter));
  if (pa.nilindex != pb.nilindex)
    return w("nilindex", nilindex_str(pa.nilindex), nilindex_str(pb.nilindex));
  if (pa.sNilindex != pb.sNilindex)
    return w("sNilindex", snilindex_str(pa.sNilindex), snilindex_str(pb.sNilindex));
  if (pa.seriesDims != pb.seriesDims)
    return w("seriesDims", dims_str(pa.seriesDims), dims_str(pb.seriesDims));
  if (pa.gradedSeriesDims0 != pb.gradedSeriesDims0)
    return w("gradedSeriesDims0", dims_str(pa.gradedSeriesDims0), dims_str(pb.gradedSeriesDims0));
  if (pa.gradedSeriesDims1 != pb.gradedSeriesDims1)
    return w("gradedSeriesDims1", dims_str(pa.gradedSeriesDims1), dims_str(pb.gradedSeriesDims1));
  if (pa.charSeq != pb.charSeq)
    return w("charSeq", pa.charSeq ? pa.charSeq->str() : "undefined",
             pb.charSeq ? pb.charSeq->str() : "undefined");
  if (pa.isLie != pb.isLie)
    return w("isLie", pa.isLie ? "true" : "false", pb.isLie ? "true" : "false");
  if (pa.shape != pb.shape) return w("shape", to_string(pa.shape), to_string(pb.shape));
  return std::nullopt;
}

std::optional<DistinguishWitness> distinguish(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim())
    throw std::invalid_argument("distinguish requires laws of the same type (n,m)");
  return distinguish_profiles(invariant_profile(a), invariant_profile(b));
}

std::vector<ClosureViolation> closure_obstruction(const SuperAlgebra& lambda,
                                                  const SuperAlgebra& mu) {
  if (lambda.even_dim() != mu.even_dim() || lambda.odd_dim() != mu.odd_dim())
    throw std::invalid_argument("closure_obstruction requires laws of the same type (n,m)");
  std::vector<ClosureViolation> out;

  const auto dimsL = central_series(lambda).dims();
  const auto dimsM = central_series(mu).dims();
  const std::size_t len = std::max(dimsL.size(), dimsM.size());
  auto at = [](const std::vector<int>& v, std::size_t s) {
    return s < v.size() ? v[s] : v.back();
  };
  for (std::size_t s = 0; s < len; ++s) {
    if (at(dimsL, s) < at(dimsM, s)) {
      out.push_back({"series", "dim C^" + std::to_string(s) + ": " +
                                   std::to_string(at(dimsL, s)) + " < " +
                                   std::to_string(at(dimsM, s))});
      break;
    }
  }

  auto check = [&](AnnihilatorKind kind, const std::string& name) {
    const int dl = annihilator(lambda, kind).dim();
    const int dm = annihilator(mu, kind).dim();
    if (dl > dm)
      out.push_back({name, std::to_string(dl) + " > " + std::to_string(dm)});
  };
  check(AnnihilatorKind::Right, "rightAnn");
  check(AnnihilatorKind::Left, "leftAnn");
  check(AnnihilatorKind::Center, "center");
  return out;
}

}  // namespace lsa
