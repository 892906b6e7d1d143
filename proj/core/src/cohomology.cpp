#include "adelic/cohomology.hpp"

#include <cstdlib>

#include "adelic/parse.hpp"

namespace adelic {

int matrix_rank(Matrix m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t r0 = static_cast<std::size_t>(rank);
    std::size_t p = r0;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r0]);
    Scalar inv = m[r0][c].inverse();
    for (std::size_t r = r0 + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Scalar f = m[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[r0][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

void require_line(const Scheme& X) {
  if (X.dim() != 1 || !X.is_projective()) fail(ErrorCode::Unsupported, "line bundle cohomology is implemented on the projective line");
}

}  // namespace

CohomologyDims line_bundle_cohomology(const Scheme& X, int n, int window) {
  require_line(X);
  const BaseField& k = X.base();
  const Vars& tv = X.patch_vars(0);
  const int N = window > 0 ? window : std::abs(n) + 2;
  const std::vector<Point> S{Point::parse(X, "pt(t=0)"), Point::parse(X, "pt(t=1)"), Point::infinity(X)};
  const std::vector<int> twist{0, 0, n};  // O(n) allows poles of order n at infinity

  // global part: functions with poles of order <= N on S
  Poly t = Poly::variable(0, tv, k);
  std::vector<RatFunc> global{RatFunc(Poly::constant(Scalar::one(k), tv, k))};
  for (int i = 1; i <= N; ++i) {
    global.push_back(RatFunc(t.pow(i)));
    global.push_back(RatFunc(t).pow(-i));
    global.push_back(RatFunc(t - t.one_like()).pow(-i));
  }
  // columns of d(f, g) = (f - g_x)_x on the window of exponents [-N, N)
  const int width = 2 * N;
  Matrix cols;
  for (const RatFunc& f : global) {
    std::vector<Scalar> col;
    for (const Point& x : S) {
      Series e = expand_at_place(X, f, x, N);
      for (int j = -N; j < N; ++j) col.push_back(e.coeff(j).base_value());
    }
    cols.push_back(std::move(col));
  }
  int local_dim = 0;
  for (std::size_t xi = 0; xi < S.size(); ++xi)
    for (int j = -twist[xi]; j < N; ++j) {
      if (j < -N) continue;
      std::vector<Scalar> col(S.size() * static_cast<std::size_t>(width), Scalar::zero(k));
      col[xi * static_cast<std::size_t>(width) + static_cast<std::size_t>(j + N)] = -Scalar::one(k);
      cols.push_back(std::move(col));
      ++local_dim;
    }
  const int rank = matrix_rank(cols);
  const int source = static_cast<int>(global.size()) + local_dim;
  const int target = static_cast<int>(S.size()) * width;
  return {source - rank, target - rank};
}

std::vector<Adele> h1_representatives(const Scheme& X, int n) {
  require_line(X);
  const BaseField& k = X.base();
  const Vars& tv = X.patch_vars(0);
  Chain c({Point::generic(X), Point::parse(X, "pt(t=0)")});
  std::vector<Adele> out;
  for (int j = 1; j <= n - 1; ++j)
    out.push_back(Adele::explicit_values(X, 1, {{c, RatFunc(Poly::variable(0, tv, k)).pow(-j)}}));
  return out;
}

std::vector<RatFunc> h0_omega_basis(const Scheme& X, int n) {
  require_line(X);
  const BaseField& k = X.base();
  Poly t = Poly::variable(0, X.patch_vars(0), k);
  std::vector<RatFunc> out;
  for (int i = 0; i <= n - 2; ++i) out.push_back(RatFunc(t.pow(i)));
  return out;
}

Matrix serre_pairing_matrix(const Scheme& X, int n) {
  std::vector<Adele> reps = h1_representatives(X, n);
  std::vector<RatFunc> forms = h0_omega_basis(X, n);
  Matrix m;
  for (const RatFunc& w : forms) {
    ResidueComplexElement phi(ResidueElement::generic(X, w));
    std::vector<Scalar> row;
    for (const Adele& a : reps) row.push_back(residue_pairing(phi, a));
    m.push_back(std::move(row));
  }
  return m;
}

Series classical_component(const Adele& a, const Point& x, int order) {
  const Scheme& X = a.scheme();
  if (X.dim() != 1 || a.degree() != 1) fail(ErrorCode::Unsupported, "classical components are defined for degree-1 adeles on a line");
  Chain c({Point::generic(X), x});
  return complete(a.evaluate(c), c, order).series();
}

}  // namespace adelic
