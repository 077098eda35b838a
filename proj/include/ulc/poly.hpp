#pragma once

/**
 * @file poly.hpp
 * @brief Sparse homogeneous multivariate polynomials over exact rationals:
 *        derivatives, supports, exchange-property checks for lattice supports,
 *        the Lorentzian test, generating polynomials, bivariate
 *        specialization, and coefficient slices.
 *
 * Term maps iterate in lexicographic exponent order everywhere; witnesses and
 * serialized output are therefore deterministic.
 */

#include <map>
#include <optional>
#include <vector>

#include "ulc/matroid.hpp"
#include "ulc/rational.hpp"
#include "ulc/setfn.hpp"
#include "ulc/symmat.hpp"

namespace ulc {

using Exponent = std::vector<int>;

int exponent_degree(const Exponent& e);

class HomogPoly {
 public:
  HomogPoly(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  /// Accumulates; validates |e| == degree; zero coefficients are not stored.
  void add_term(const Exponent& e, const Rational& c);
  Rational coeff(const Exponent& e) const;
  bool is_zero() const { return terms_.empty(); }
  std::vector<Exponent> support() const;

  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly scaled(const Rational& c) const;
  bool operator==(const HomogPoly& o) const = default;

 private:
  int nvars_, degree_;
  std::map<Exponent, Rational> terms_;
};

HomogPoly partial(const HomogPoly& f, int var);

/// Iterated partial derivative; the zero polynomial when |alpha| > degree.
HomogPoly partial_multi(const HomogPoly& f, const Exponent& alpha);

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g);

/// (f_0, ..., f_d) with f = sum_k x_var^k f_k, each f_k in the remaining
/// variables and homogeneous of degree d - k.
std::vector<HomogPoly> coefficient_slices(const HomogPoly& f, int var);

/// block[v] in {0,1}: substitute one fresh variable per block.
HomogPoly specialize_bivariate(const HomogPoly& f, const std::vector<int>& block);

/// Requires the variable to appear in no term.
HomogPoly drop_variable(const HomogPoly& f, int var);

struct MConvexWitness {
  Exponent alpha, beta;
  int i = -1;
};

struct MConvexVerdict {
  bool ok = false;
  std::optional<MConvexWitness> witness;
};

/// Symmetric exchange property for a subset of the degree-d simplex.
MConvexVerdict is_mconvex_set(const std::vector<Exponent>& j_set, int nvars, int degree);

struct LorentzianVerdict {
  bool ok = false;
  enum class Reason {
    None,
    NegativeCoefficient,  // witness: monomial
    SupportNotMConvex,    // witness: exchange
    TooManyPositive,      // witness: alpha + hessian_inertia
    InternalZero,         // bivariate route
    NotLogConcave,        // bivariate route; witness: index in monomial[0]
  } reason = Reason::None;
  Exponent monomial;
  std::optional<MConvexWitness> exchange;
  Exponent alpha;
  Inertia hessian_inertia;
};

constexpr long kDefaultAlphaCap = 1000000;

/// Nonnegative coefficients, an exchange-closed support, and for every alpha
/// in the codegree-2 simplex a derivative Hessian with at most one positive
/// eigenvalue. Degree <= 1: nonnegative coefficients and exchange-closed
/// support. Throws CapExceeded when the alpha count exceeds the cap.
LorentzianVerdict is_lorentzian(const HomogPoly& f, long alpha_cap = kDefaultAlphaCap);

/// Two-variable route: normalized coefficients a_k / C(d,k) nonnegative,
/// log-concave, with no internal zeros. Agrees with is_lorentzian.
LorentzianVerdict is_lorentzian_bivariate(const HomogPoly& f);

// Generating polynomials. Ground variables come first; the homogenizing
// variable is last (index n).
HomogPoly z_poly(const SetFunction& nu, const Rational& q,
                 EvalMode mode = EvalMode::Exact);
/// z_poly with the homogenizing power divided by |E\S|!.
HomogPoly nz_poly(const SetFunction& nu, const Rational& q,
                  EvalMode mode = EvalMode::Exact);
HomogPoly tutte_poly(const Matroid& m, const Rational& q);
HomogPoly indep_poly(const Matroid& m);

/// Function on the degree-d simplex; absent exponents are +inf (omitted).
struct MConvexFn {
  int nvars = 0;
  int degree = 0;
  std::map<Exponent, Rational> values;
};

/// sum over dom of q^{nu(alpha)} x^alpha / alpha!.
HomogPoly mconvex_poly(const MConvexFn& nu, const Rational& q,
                       EvalMode mode = EvalMode::Exact);

}  // namespace ulc
