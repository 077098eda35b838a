#pragma once

/**
 * @file trees.hpp
 * @brief Ultrametric trees: construction and validation, leaf distance
 *        matrices, binarization, upper-subtree matrices with a replayable PSD
 *        reduction certificate, the optimal-constant bisection, and the
 *        equality-case predicates.
 *
 * Vertices carry caller-chosen integer ids; all orderings (leaf rows of the
 * distance matrix, rows of the upper-subtree matrix) are by ascending id.
 */

#include <array>
#include <optional>
#include <vector>

#include "ulc/rational.hpp"
#include "ulc/symmat.hpp"

namespace ulc {

struct TreeEdge {
  int parent;
  int child;
  Rational length;
};

class UltrametricTree {
 public:
  /// Validates: a rooted tree, nonnegative lengths, all leaves equidistant
  /// from the root.
  UltrametricTree(int root_id, const std::vector<TreeEdge>& edges);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }            // -1 at the root
  const Rational& edge_length(int v) const;                  // v != root
  const std::vector<int>& children(int v) const { return children_[v]; }
  bool is_leaf(int v) const { return children_[v].empty(); }
  const std::vector<int>& leaves() const { return leaves_; }
  int leaf_count() const { return static_cast<int>(leaves_.size()); }

  int id(int v) const { return ids_[v]; }
  int vertex_by_id(int id) const;  // -1 when absent

  const Rational& radius() const { return radius_; }
  const Rational& depth(int v) const { return depth_[v]; }
  const Rational& height(int v) const { return height_[v]; }
  int lca(int u, int v) const;
  int leaves_below(int v) const { return leaves_below_[v]; }

  /// Canonical edge list (sorted by child id), suitable for serialization.
  std::vector<TreeEdge> edge_list() const;

 private:
  int root_ = 0;
  std::vector<int> ids_;       // sorted ascending; vertex index = position
  std::vector<int> parent_;
  std::vector<Rational> length_;
  std::vector<std::vector<int>> children_;
  std::vector<int> leaves_;
  std::vector<Rational> depth_, height_;
  std::vector<int> leaves_below_;
  Rational radius_;
};

/// D[i][j] = path length between leaves i and j, rows ordered by leaf id.
SymMatrix leaf_distance_matrix(const UltrametricTree& t);

/// Symmetric nonnegative pair function with zero diagonal on {0..n-1};
/// three-point validation is separate (pseudometrics are allowed).
struct UltrametricFn {
  explicit UltrametricFn(int n);
  UltrametricFn(int n, std::vector<Rational> entries);  // row-major n*n

  int size() const { return n_; }
  const Rational& d(int i, int j) const { return entries_[i * n_ + j]; }
  void set(int i, int j, const Rational& v);

  /// First triple (lex order) whose maximum distance is attained only once.
  std::optional<std::array<int, 3>> three_point_violation() const;

  bool operator==(const UltrametricFn& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }

 private:
  int n_;
  std::vector<Rational> entries_;
};

/// Single-linkage construction. Leaves get ids 0..n-1; internal vertices get
/// fresh ids in creation order (children built before their parent, classes
/// ordered by smallest member). Throws NotUltrametricError with the witness
/// triple when the three-point condition fails. Points at distance zero are
/// merged under a shared zero-height parent.
UltrametricTree tree_from_ultrametric(const UltrametricFn& d);

/// Every internal vertex of the result has at most two children: a vertex
/// with k > 2 children becomes a left-deep chain of k-1 binary vertices
/// joined by zero-length edges. New vertices take fresh ids above the current
/// maximum, assigned in processing order (vertices visited by ascending id,
/// chains built bottom-up). Leaf set and leaf distances are unchanged.
UltrametricTree binarize(const UltrametricTree& t);

/// Ancestor-closed nonempty vertex set, stored as sorted vertex ids.
struct UpperSubtree {
  std::vector<int> ids;

  static UpperSubtree of_ids(const UltrametricTree& t, std::vector<int> ids);
  static UpperSubtree whole_tree(const UltrametricTree& t);
  bool contains(int id) const;
};

/// Minimal elements (the leaves) of the upper subtree, ascending by id.
std::vector<int> u_min(const UltrametricTree& t, const UpperSubtree& u);

/// The matrix indexed by u_min with entries (1-1/n) - H(i∨j) off-diagonal and
/// (1-1/n) - (1-1/n_i) H(i) on the diagonal, where n_i counts leaves below i
/// and n is their total. Requires radius exactly 1 (WrongRadius otherwise).
SymMatrix a_matrix(const UltrametricTree& t, const UpperSubtree& u);

struct TreeReductionStep {
  enum class Kind { Contract, Merge, Base };
  Kind kind = Kind::Base;
  // Contract: leaf i with parent h and grandparent g (sibling subtree of i is
  // dropped and the two edges fuse). Merge: sibling leaves i < j under h.
  int i = -1, j = -1, h = -1, g = -1;
  Rational delta_i, delta_j;  // Merge: diagonal relaxation amounts
  Rational pivot;             // Merge: (1/n_i + 1/n_j) H(h); Base: the entry
};

/// Reduction sequence that exhibits a_matrix(t, u) as positive semidefinite.
/// Step vertex ids refer to binarize(t), which replay recomputes.
struct TreePsdCertificate {
  std::vector<TreeReductionStep> steps;
  std::vector<Rational> pivots;  // merge pivots in order, then the base entry
};

TreePsdCertificate certify_a_psd(const UltrametricTree& t, const UpperSubtree& u);

/// Exact verification: every relaxation amount is nonnegative, every
/// congruence step reproduces the next matrix entrywise, every pivot is
/// nonnegative, and the base entry matches.
bool replay_a_psd(const UltrametricTree& t, const UpperSubtree& u,
                  const TreePsdCertificate& cert);

struct CtResult {
  Rational lo, hi;      // lo <= c_T <= hi with hi - lo <= tol
  bool exact = false;   // lo == hi is an exact value
  bool degenerate = false;  // all leaf distances zero, c_T = 0
};

/// Bisection on c over [0, 1-1/n] with exact PSD tests of c*1 - D/2.
/// Reports the exact boundary value 1-1/n when the probe just below it fails
/// and the tree is a star-metric.
CtResult c_t(const UltrametricTree& t, const Rational& tol);

struct TreeClass {
  bool leaf_positive = false;  // every leaf edge has positive length
  bool star_metric = false;    // every leaf-pair lca height is 0 or 1
};

TreeClass classify(const UltrametricTree& t);

/// Divides all edge lengths by the radius; rejects radius 0 (WrongRadius).
UltrametricTree rescaled_to_unit_radius(const UltrametricTree& t);

}  // namespace ulc
