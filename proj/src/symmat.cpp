#include "ulc/symmat.hpp"

#include <algorithm>
#include <cassert>

namespace ulc {

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense to_dense(const SymMatrix& m) {
  const int n = m.size();
  Dense d(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = m(i, j);
  return d;
}

Dense dense_identity(int n) {
  Dense d(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  const int n = static_cast<int>(a.size());
  Dense c(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

int sign_variations(const std::vector<Rational>& coeffs) {
  int variations = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

std::size_t SymMatrix::idx(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw Error(ErrorCode::BadIndices, "matrix index out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::BadSizes, "matrix size must be positive");
  if (n > kMaxSize) throw Error(ErrorCode::CapExceeded, "matrix size above cap");
  a_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

SymMatrix SymMatrix::constant(int n, const Rational& c) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, c);
  return m;
}

void SymMatrix::set(int i, int j, const Rational& v) {
  a_[idx(i, j)] = v;
  a_[idx(j, i)] = v;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::BadSizes, "size mismatch");
  SymMatrix r(n_);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
  return r;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::BadSizes, "size mismatch");
  SymMatrix r(n_);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
  return r;
}

SymMatrix SymMatrix::scaled(const Rational& c) const {
  SymMatrix r(n_);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] * c;
  return r;
}

SymMatrix SymMatrix::principal_submatrix(const std::vector<int>& keep) const {
  SymMatrix r(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      r.set(static_cast<int>(i), static_cast<int>(j), (*this)(keep[i], keep[j]));
  return r;
}

std::vector<Rational> char_poly(const SymMatrix& m) {
  // Faddeev-LeVerrier: N_1 = A, a_k = -tr(N_k)/k, N_{k+1} = A (N_k + a_k I).
  const int n = m.size();
  const Dense a = to_dense(m);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  coeffs[0] = 1;
  Dense nk = a;
  for (int k = 1; k <= n; ++k) {
    Rational trace(0);
    for (int i = 0; i < n; ++i) trace += nk[i][i];
    coeffs[k] = -trace / k;
    if (k < n) {
      for (int i = 0; i < n; ++i) nk[i][i] += coeffs[k];
      nk = dense_mul(a, nk);
    }
  }
  return coeffs;
}

Inertia inertia(const SymMatrix& m) {
  const auto coeffs = char_poly(m);
  const int n = m.size();
  // All roots real, so Descartes counts are exact; negate odd-degree
  // coefficients for the negative-root count.
  Inertia result;
  result.n_pos = sign_variations(coeffs);
  std::vector<Rational> flipped(coeffs);
  for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
  result.n_neg = sign_variations(flipped);
  result.n_zero = n - result.n_pos - result.n_neg;
  assert(result.n_zero >= 0);
  return result;
}

PsdCertificate is_psd(const SymMatrix& m) {
  const int n = m.size();
  Dense a = to_dense(m);
  Dense c = dense_identity(n);  // invariant: a == c^T * m * c

  PsdCertificate cert;
  auto column_of = [&](int k) {
    std::vector<Rational> v(n);
    for (int i = 0; i < n; ++i) v[i] = c[i][k];
    return v;
  };

  for (int k = 0; k < n; ++k) {
    const int ds = sgn(a[k][k]);
    if (ds < 0) {
      cert.psd = false;
      cert.witness = column_of(k);
      return cert;
    }
    if (ds == 0) {
      int off = -1;
      for (int j = k + 1; j < n; ++j)
        if (sgn(a[k][j]) != 0) {
          off = j;
          break;
        }
      if (off < 0) {
        cert.pivots.push_back(Rational(0));
        continue;
      }
      // Zero diagonal with a nonzero off-diagonal entry c0 = a[k][off]:
      // w = t e_k - sign(c0) e_off with t = (1+|a_oo|)/|c0| gives
      // w^T a w = a_oo - 2(1+|a_oo|) < 0.
      const Rational c0 = a[k][off];
      const Rational t = (1 + abs(a[off][off])) / abs(c0);
      std::vector<Rational> w(n, Rational(0));
      w[k] = t;
      w[off] = sgn(c0) > 0 ? Rational(-1) : Rational(1);
      std::vector<Rational> v(n, Rational(0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[i] += c[i][j] * w[j];
      cert.psd = false;
      cert.witness = std::move(v);
      return cert;
    }
    ElimStep step{k, {}};
    const Rational pivot = a[k][k];
    for (int j = k + 1; j < n; ++j) {
      if (sgn(a[k][j]) == 0) continue;
      const Rational f = a[k][j] / pivot;
      step.factors.emplace_back(j, f);
      for (int i = 0; i < n; ++i) a[i][j] -= f * a[i][k];
      for (int i = 0; i < n; ++i) a[j][i] -= f * a[k][i];
      for (int i = 0; i < n; ++i) c[i][j] -= f * c[i][k];
    }
    cert.pivots.push_back(pivot);
    if (!step.factors.empty()) cert.steps.push_back(std::move(step));
  }
  cert.psd = true;
  return cert;
}

bool replay_psd_certificate(const SymMatrix& m, const PsdCertificate& cert) {
  const int n = m.size();
  if (!cert.psd) {
    if (static_cast<int>(cert.witness.size()) != n) return false;
    return sgn(quad_form(m, cert.witness)) < 0;
  }
  if (static_cast<int>(cert.pivots.size()) != n) return false;
  Dense a = to_dense(m);
  for (const auto& step : cert.steps) {
    if (step.pivot < 0 || step.pivot >= n) return false;
    for (const auto& [j, f] : step.factors) {
      if (j < 0 || j >= n) return false;
      for (int i = 0; i < n; ++i) a[i][j] -= f * a[i][step.pivot];
      for (int i = 0; i < n; ++i) a[j][i] -= f * a[step.pivot][i];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (sgn(cert.pivots[i]) < 0) return false;
    for (int j = 0; j < n; ++j) {
      const Rational expected = (i == j) ? cert.pivots[i] : Rational(0);
      if (a[i][j] != expected) return false;
    }
  }
  return true;
}

Rational quad_form(const SymMatrix& m, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != m.size())
    throw Error(ErrorCode::BadSizes, "vector length mismatch");
  Rational acc(0);
  for (int i = 0; i < m.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (int j = 0; j < m.size(); ++j) acc += v[i] * m(i, j) * v[j];
  }
  return acc;
}

SymMatrix schur_complement(const SymMatrix& m, const std::vector<int>& pivot_block) {
  const int n = m.size();
  std::vector<bool> in_pivot(n, false);
  for (int p : pivot_block) {
    if (p < 0 || p >= n || in_pivot[p])
      throw Error(ErrorCode::BadIndices, "bad pivot block");
    in_pivot[p] = true;
  }
  std::vector<int> pv = pivot_block;
  std::sort(pv.begin(), pv.end());
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!in_pivot[i]) rest.push_back(i);
  if (pv.empty() || rest.empty())
    throw Error(ErrorCode::BadIndices, "pivot block must be a proper nonempty subset");

  const int p = static_cast<int>(pv.size());
  const int r = static_cast<int>(rest.size());

  // Solve PP * X = PQ by Gaussian elimination on the augmented system.
  Dense aug(p, std::vector<Rational>(p + r));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) aug[i][j] = m(pv[i], pv[j]);
    for (int j = 0; j < r; ++j) aug[i][p + j] = m(pv[i], rest[j]);
  }
  for (int col = 0; col < p; ++col) {
    int pivot_row = -1;
    for (int i = col; i < p; ++i)
      if (sgn(aug[i][col]) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0)
      throw Error(ErrorCode::SingularPivot, "pivot block is singular");
    std::swap(aug[col], aug[pivot_row]);
    const Rational d = aug[col][col];
    for (int j = col; j < p + r; ++j) aug[col][j] /= d;
    for (int i = 0; i < p; ++i) {
      if (i == col || sgn(aug[i][col]) == 0) continue;
      const Rational f = aug[i][col];
      for (int j = col; j < p + r; ++j) aug[i][j] -= f * aug[col][j];
    }
  }

  SymMatrix result(r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Rational v = m(rest[i], rest[j]);
      for (int k = 0; k < p; ++k) v -= m(rest[i], pv[k]) * aug[k][p + j];
      result.set(i, j, v);
    }
  return result;
}

SymMatrix congruence_rescale(const SymMatrix& m, const std::vector<Rational>& d) {
  if (static_cast<int>(d.size()) != m.size())
    throw Error(ErrorCode::BadSizes, "scale vector length mismatch");
  for (const auto& s : d)
    if (sgn(s) <= 0) throw Error(ErrorCode::NonPositiveScale, "scale must be positive");
  SymMatrix r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) r.set(i, j, d[i] * m(i, j) * d[j]);
  return r;
}

SymMatrix permuted(const SymMatrix& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.size())
    throw Error(ErrorCode::BadSizes, "permutation length mismatch");
  SymMatrix r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) r.set(i, j, m(perm[i], perm[j]));
  return r;
}

}  // namespace ulc
