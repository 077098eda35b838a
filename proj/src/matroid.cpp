#include "ulc/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace ulc {

namespace {

int popcount(std::uint32_t s) { return std::popcount(s); }

void check_ground(int n) {
  if (n < 1 || n > Matroid::kMaxGround)
    throw Error(ErrorCode::CapExceeded,
                "ground size must be in [1," + std::to_string(Matroid::kMaxGround) + "]");
}

}  // namespace

MatroidVerdict validate_family(int n, const std::vector<std::uint32_t>& family) {
  check_ground(n);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<bool> member(std::size_t{1} << n, false);
  for (auto s : family) {
    if (s & ~full) throw Error(ErrorCode::InvalidInput, "set outside ground set");
    if (member[s]) throw Error(ErrorCode::InvalidInput, "duplicate set in family");
    member[s] = true;
  }
  if (family.empty()) return {false, MatroidAxiomWitness{1, 0, 0}};

  std::vector<std::uint32_t> sorted(family);
  std::sort(sorted.begin(), sorted.end());

  for (auto s : sorted)
    for (int i = 0; i < n; ++i) {
      const std::uint32_t bit = 1u << i;
      if ((s & bit) && !member[s ^ bit])
        return {false, MatroidAxiomWitness{1, s, s ^ bit}};
    }

  for (auto big : sorted)
    for (auto small : sorted) {
      if (popcount(big) <= popcount(small)) continue;
      bool augmented = false;
      for (int i = 0; i < n && !augmented; ++i) {
        const std::uint32_t bit = 1u << i;
        if ((big & bit) && !(small & bit) && member[small | bit]) augmented = true;
      }
      if (!augmented) return {false, MatroidAxiomWitness{2, big, small}};
    }
  return {true, std::nullopt};
}

Matroid::Matroid(int n, std::vector<std::uint32_t> family)
    : n_(n), family_(std::move(family)) {
  std::sort(family_.begin(), family_.end());
  member_.assign(std::size_t{1} << n_, false);
  for (auto s : family_) member_[s] = true;
}

Matroid Matroid::from_independent(int n, std::vector<std::uint32_t> family) {
  const auto verdict = validate_family(n, family);
  if (!verdict.ok) {
    const auto& w = *verdict.witness;
    throw Error(ErrorCode::InvalidInput,
                "matroid axiom " + std::to_string(w.axiom) + " fails on (" +
                    std::to_string(w.I) + "," + std::to_string(w.J) + ")");
  }
  return Matroid(n, std::move(family));
}

Matroid Matroid::from_bases(int n, const std::vector<std::uint32_t>& bases) {
  check_ground(n);
  std::vector<bool> member(std::size_t{1} << n, false);
  for (auto b : bases) {
    // downward closure
    for (std::uint32_t s = b;; s = (s - 1) & b) {
      member[s] = true;
      if (s == 0) break;
    }
  }
  std::vector<std::uint32_t> family;
  for (std::uint32_t s = 0; s < member.size(); ++s)
    if (member[s]) family.push_back(s);
  return from_independent(n, std::move(family));
}

Matroid Matroid::uniform(int rank, int n) {
  check_ground(n);
  if (rank < 0 || rank > n) throw Error(ErrorCode::InvalidInput, "bad uniform rank");
  std::vector<std::uint32_t> family;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (popcount(s) <= rank) family.push_back(s);
  return Matroid(n, std::move(family));
}

Matroid Matroid::free(int n) { return uniform(n, n); }

Matroid Matroid::graphic(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  check_ground(m);
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");

  std::vector<std::uint32_t> family;
  std::vector<int> uf(n_vertices);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::iota(uf.begin(), uf.end(), 0);
    bool forest = true;
    for (int e = 0; e < m && forest; ++e) {
      if (!(s & (1u << e))) continue;
      const int ru = find(edges[e].first), rv = find(edges[e].second);
      if (ru == rv)
        forest = false;
      else
        uf[ru] = rv;
    }
    if (forest) family.push_back(s);
  }
  return Matroid(m, std::move(family));
}

int Matroid::rank() const { return ulc::rank(*this, (1u << n_) - 1); }

int rank(const Matroid& m, std::uint32_t subset) {
  int best = 0;
  for (auto s : m.family())
    if ((s & ~subset) == 0) best = std::max(best, popcount(s));
  return best;
}

std::vector<long long> ik_counts(const Matroid& m) {
  std::vector<long long> counts(static_cast<std::size_t>(m.ground_size()) + 1, 0);
  for (auto s : m.family()) ++counts[popcount(s)];
  return counts;
}

long long n_partitions(const Matroid& m, int a, int b) {
  if (a < 0 || b < 0 || a + b != m.ground_size())
    throw Error(ErrorCode::BadSizes, "sizes must be nonnegative with a + b = n");
  const std::uint32_t full = (1u << m.ground_size()) - 1;
  long long count = 0;
  for (auto s : m.family())
    if (popcount(s) == a && m.independent(full ^ s)) ++count;
  return count;
}

}  // namespace ulc
