#pragma once

/**
 * @file symmat.hpp
 * @brief Exact symmetric-matrix analysis: characteristic polynomial, inertia,
 *        PSD verdicts with replayable certificates, Schur complements, and
 *        congruence transforms.
 *
 * The verdict path for inertia goes through the exact characteristic
 * polynomial plus Descartes sign variations (valid because all eigenvalues of
 * a symmetric matrix are real). Symmetric elimination is used only to build
 * certificates and witnesses.
 */

#include <optional>
#include <utility>
#include <vector>

#include "ulc/rational.hpp"

namespace ulc {

class SymMatrix {
 public:
  static constexpr int kMaxSize = 64;

  explicit SymMatrix(int n);
  static SymMatrix identity(int n);
  static SymMatrix constant(int n, const Rational& c);

  int size() const { return n_; }
  const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, const Rational& v);

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix scaled(const Rational& c) const;
  SymMatrix principal_submatrix(const std::vector<int>& keep) const;

  bool operator==(const SymMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const SymMatrix& o) const { return !(*this == o); }

 private:
  std::size_t idx(int i, int j) const;
  int n_;
  std::vector<Rational> a_;
};

struct Inertia {
  int n_pos = 0;
  int n_zero = 0;
  int n_neg = 0;
  bool operator==(const Inertia& o) const = default;
};

/// Coefficients of det(lambda*I - M), leading coefficient first (monic).
std::vector<Rational> char_poly(const SymMatrix& m);

Inertia inertia(const SymMatrix& m);

/// One symmetric elimination step: for each (j, f) in factors,
/// row j -= f * row pivot and col j -= f * col pivot.
struct ElimStep {
  int pivot;
  std::vector<std::pair<int, Rational>> factors;
};

/// Psd case: replaying `steps` against the matrix yields diag(pivots) with
/// every pivot >= 0. NotPsd case: `witness` satisfies w^T M w < 0 exactly.
struct PsdCertificate {
  bool psd = false;
  std::vector<ElimStep> steps;
  std::vector<Rational> pivots;
  std::vector<Rational> witness;
};

PsdCertificate is_psd(const SymMatrix& m);
bool replay_psd_certificate(const SymMatrix& m, const PsdCertificate& cert);

Rational quad_form(const SymMatrix& m, const std::vector<Rational>& v);

/// Complement block minus cross^T * pivot_block^{-1} * cross.
/// Throws SingularPivot when the pivot block is not invertible.
SymMatrix schur_complement(const SymMatrix& m, const std::vector<int>& pivot_block);

/// result[i][j] = d[i] * m[i][j] * d[j]; requires every d[i] > 0.
SymMatrix congruence_rescale(const SymMatrix& m, const std::vector<Rational>& d);

/// Simultaneous row/column permutation: result[i][j] = m[perm[i]][perm[j]].
SymMatrix permuted(const SymMatrix& m, const std::vector<int>& perm);

}  // namespace ulc
