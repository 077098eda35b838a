#pragma once

/**
 * @file setfn.hpp
 * @brief Set functions 2^E -> R ∪ {-inf}: the two-case exchange check with
 *        witnesses, contraction, matroid-derived constructors, valuated
 *        matroids with their maximal extension, the induced ultrametric, and
 *        the duplicate-copy extension.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ulc/matroid.hpp"
#include "ulc/rational.hpp"

namespace ulc {

class SetFunction {
 public:
  static constexpr int kMaxGround = 20;

  /// values indexed by subset bitmask, length 1 << n; the effective domain
  /// (finite values) must be nonempty.
  SetFunction(int n, std::vector<ExtValue> values);

  int ground_size() const { return n_; }
  const ExtValue& at(std::uint32_t subset) const { return values_[subset]; }
  bool in_domain(std::uint32_t subset) const { return values_[subset].finite(); }
  std::uint32_t full_set() const { return (1u << n_) - 1; }

  bool operator==(const SetFunction& o) const {
    return n_ == o.n_ && values_ == o.values_;
  }

 private:
  int n_;
  std::vector<ExtValue> values_;
};

struct ExchangeWitness {
  std::uint32_t I1 = 0;
  std::uint32_t I2 = 0;
  int i1 = -1;
};

struct MnatVerdict {
  bool ok = false;
  std::optional<ExchangeWitness> witness;
};

/// Exhaustive two-case exchange check; the witness is the bitmask-least
/// violating (I1, I2, i1).
MnatVerdict is_mnat_concave(const SetFunction& nu);

/// nu/i on E \ {i} (elements above i shift down): (nu/i)(S) = nu(S ∪ i).
SetFunction contract(const SetFunction& nu, int i);

enum class MatroidFnKind { Indicator, Rank };
SetFunction from_matroid(const Matroid& m, MatroidFnKind kind);

class ValuatedMatroid {
 public:
  /// values on d-subsets; unlisted d-subsets are -inf; not all may be -inf.
  ValuatedMatroid(int n, int d, std::map<std::uint32_t, ExtValue> values);

  int ground_size() const { return n_; }
  int rank() const { return d_; }
  const ExtValue& at(std::uint32_t basis) const;
  const std::vector<std::uint32_t>& d_subsets() const { return subsets_; }

 private:
  int n_, d_;
  std::vector<std::uint32_t> subsets_;  // all d-subsets, ascending
  std::vector<ExtValue> values_;        // aligned with subsets_
  std::map<std::uint32_t, int> index_;
};

struct BasisExchangeWitness {
  std::uint32_t B1 = 0;
  std::uint32_t B2 = 0;
  int b1 = -1;
};

struct ValuatedVerdict {
  bool ok = false;
  std::optional<BasisExchangeWitness> witness;
};

ValuatedVerdict is_valuated_matroid(const ValuatedMatroid& v);

/// S -> max over d-supersets of S; the empty maximum is -inf.
SetFunction murota_extension(const ValuatedMatroid& v);

/// The matroid whose independent sets form dom of the extension.
Matroid underlying_matroid(const ValuatedMatroid& v);

struct UltrametricFn;  // defined in trees.hpp

/// d(i,j) = 2 q^{-nu(ij)+nu(i)+nu(j)-nu(empty)}; requires every subset of size
/// at most 2 to be in dom (DomainTooSmall otherwise). Validates the three-point
/// condition of the result.
UltrametricFn ultrametric_from(const SetFunction& nu, const Rational& q);

/// multiplicity[e] in {0,1,2}; the result lives on a ground set with one
/// position per copy and collapses copies through the projection map.
SetFunction duplicate_extend(const SetFunction& nu, const std::vector<int>& multiplicity);

}  // namespace ulc
