#pragma once

/**
 * @file matroid.hpp
 * @brief Finite matroids as explicit independent-set families over a bitmask
 *        ground set: axiom validation, rank, cardinality counts, and ordered
 *        independent-partition counts.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ulc/errors.hpp"

namespace ulc {

struct MatroidAxiomWitness {
  int axiom = 0;   // 1 = downward closure, 2 = augmentation
  std::uint32_t I = 0;
  std::uint32_t J = 0;
};

struct MatroidVerdict {
  bool ok = false;
  std::optional<MatroidAxiomWitness> witness;
};

/// Axiom check with the smallest violating pair as witness. Does not throw on
/// axiom failure; malformed input (out-of-range bits, duplicates) does throw.
MatroidVerdict validate_family(int n, const std::vector<std::uint32_t>& family);

class Matroid {
 public:
  static constexpr int kMaxGround = 16;

  /// Validates the axioms; throws InvalidInput with the witness on failure.
  static Matroid from_independent(int n, std::vector<std::uint32_t> family);
  static Matroid from_bases(int n, const std::vector<std::uint32_t>& bases);
  static Matroid uniform(int rank, int n);
  static Matroid free(int n);
  /// Ground set = the edge list; independent subsets are the forests.
  static Matroid graphic(int n_vertices, const std::vector<std::pair<int, int>>& edges);

  int ground_size() const { return n_; }
  bool independent(std::uint32_t set) const { return member_[set]; }
  const std::vector<std::uint32_t>& family() const { return family_; }
  int rank() const;

 private:
  Matroid(int n, std::vector<std::uint32_t> family);
  int n_;
  std::vector<std::uint32_t> family_;  // sorted ascending by bitmask
  std::vector<bool> member_;           // size 1 << n
};

int rank(const Matroid& m, std::uint32_t subset);

/// (I_0, ..., I_n): number of independent sets of each cardinality.
std::vector<long long> ik_counts(const Matroid& m);

/// Ordered partitions E = A ⊔ B with A, B independent, |A| = a, |B| = b.
long long n_partitions(const Matroid& m, int a, int b);

}  // namespace ulc
