#include "ulc/setfn.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ulc/trees.hpp"

namespace ulc {

namespace {

int popcount(std::uint32_t s) { return std::popcount(s); }

}  // namespace

SetFunction::SetFunction(int n, std::vector<ExtValue> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || n > kMaxGround)
    throw Error(ErrorCode::CapExceeded,
                "ground size must be in [1," + std::to_string(kMaxGround) + "]");
  if (values_.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::BadSizes, "value table must have 2^n entries");
  const bool any_finite =
      std::any_of(values_.begin(), values_.end(), [](const ExtValue& v) { return v.finite(); });
  if (!any_finite)
    throw Error(ErrorCode::InvalidInput, "effective domain must be nonempty");
}

MnatVerdict is_mnat_concave(const SetFunction& nu) {
  const std::uint32_t count = 1u << nu.ground_size();
  const int n = nu.ground_size();
  for (std::uint32_t i1_set = 0; i1_set < count; ++i1_set) {
    for (std::uint32_t i2_set = 0; i2_set < count; ++i2_set) {
      const ExtValue lhs = nu.at(i1_set) + nu.at(i2_set);
      if (!lhs.finite()) continue;  // both exchange inequalities hold vacuously
      const std::uint32_t only1 = i1_set & ~i2_set;
      const std::uint32_t only2 = i2_set & ~i1_set;
      for (int e = 0; e < n; ++e) {
        const std::uint32_t bit = 1u << e;
        if (!(only1 & bit)) continue;
        if (lhs <= nu.at(i1_set ^ bit) + nu.at(i2_set | bit)) continue;
        bool rescued = false;
        for (int f = 0; f < n && !rescued; ++f) {
          const std::uint32_t bit2 = 1u << f;
          if (!(only2 & bit2)) continue;
          if (lhs <= nu.at((i1_set ^ bit) | bit2) + nu.at((i2_set ^ bit2) | bit))
            rescued = true;
        }
        if (!rescued) return {false, ExchangeWitness{i1_set, i2_set, e}};
      }
    }
  }
  return {true, std::nullopt};
}

SetFunction contract(const SetFunction& nu, int i) {
  const int n = nu.ground_size();
  if (i < 0 || i >= n) throw Error(ErrorCode::BadIndices, "element out of range");
  if (n == 1)
    throw Error(ErrorCode::BadSizes, "cannot contract the last element");
  const std::uint32_t low = (1u << i) - 1;
  std::vector<ExtValue> values(std::size_t{1} << (n - 1));
  for (std::uint32_t s = 0; s < values.size(); ++s) {
    const std::uint32_t lifted = (s & low) | ((s & ~low) << 1);
    values[s] = nu.at(lifted | (1u << i));
  }
  return SetFunction(n - 1, std::move(values));
}

SetFunction from_matroid(const Matroid& m, MatroidFnKind kind) {
  const int n = m.ground_size();
  if (n > SetFunction::kMaxGround)
    throw Error(ErrorCode::CapExceeded, "matroid too large for a set function");
  std::vector<ExtValue> values(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < values.size(); ++s) {
    if (kind == MatroidFnKind::Indicator)
      values[s] = m.independent(s) ? ExtValue(0) : ExtValue::neg_infinity();
    else
      values[s] = ExtValue(rank(m, s));
  }
  return SetFunction(n, std::move(values));
}

ValuatedMatroid::ValuatedMatroid(int n, int d, std::map<std::uint32_t, ExtValue> values)
    : n_(n), d_(d) {
  if (n < 1 || n > SetFunction::kMaxGround)
    throw Error(ErrorCode::CapExceeded, "ground size out of range");
  if (d < 0 || d > n) throw Error(ErrorCode::BadSizes, "rank must be in [0,n]");
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (popcount(s) == d) subsets_.push_back(s);
  values_.assign(subsets_.size(), ExtValue::neg_infinity());
  for (std::size_t k = 0; k < subsets_.size(); ++k) index_[subsets_[k]] = static_cast<int>(k);
  bool any_finite = false;
  for (const auto& [s, v] : values) {
    const auto it = index_.find(s);
    if (it == index_.end())
      throw Error(ErrorCode::BadSizes, "value key is not a d-subset");
    values_[it->second] = v;
    any_finite = any_finite || v.finite();
  }
  if (!any_finite)
    throw Error(ErrorCode::InvalidInput, "all basis values are -inf");
}

const ExtValue& ValuatedMatroid::at(std::uint32_t basis) const {
  const auto it = index_.find(basis);
  if (it == index_.end()) throw Error(ErrorCode::BadIndices, "not a d-subset");
  return values_[it->second];
}

ValuatedVerdict is_valuated_matroid(const ValuatedMatroid& v) {
  const int n = v.ground_size();
  for (auto b1 : v.d_subsets()) {
    for (auto b2 : v.d_subsets()) {
      const ExtValue lhs = v.at(b1) + v.at(b2);
      if (!lhs.finite()) continue;
      for (int e = 0; e < n; ++e) {
        const std::uint32_t bit = 1u << e;
        if (!(b1 & bit) || (b2 & bit)) continue;
        bool exchanged = false;
        for (int f = 0; f < n && !exchanged; ++f) {
          const std::uint32_t bit2 = 1u << f;
          if (!(b2 & bit2) || (b1 & bit2)) continue;
          if (lhs <= v.at((b1 ^ bit) | bit2) + v.at((b2 ^ bit2) | bit))
            exchanged = true;
        }
        if (!exchanged) return {false, BasisExchangeWitness{b1, b2, e}};
      }
    }
  }
  return {true, std::nullopt};
}

SetFunction murota_extension(const ValuatedMatroid& v) {
  const int n = v.ground_size();
  std::vector<ExtValue> values(std::size_t{1} << n, ExtValue::neg_infinity());
  for (std::uint32_t s = 0; s < values.size(); ++s) {
    if (popcount(s) > v.rank()) continue;
    ExtValue best = ExtValue::neg_infinity();
    for (auto b : v.d_subsets())
      if ((s & ~b) == 0) best = max(best, v.at(b));
    values[s] = best;
  }
  return SetFunction(n, std::move(values));
}

Matroid underlying_matroid(const ValuatedMatroid& v) {
  const SetFunction ext = murota_extension(v);
  std::vector<std::uint32_t> family;
  for (std::uint32_t s = 0; s <= ext.full_set(); ++s)
    if (ext.in_domain(s)) family.push_back(s);
  return Matroid::from_independent(v.ground_size(), std::move(family));
}

UltrametricFn ultrametric_from(const SetFunction& nu, const Rational& q) {
  const int n = nu.ground_size();
  for (std::uint32_t s = 0; s <= nu.full_set(); ++s)
    if (popcount(s) <= 2 && !nu.in_domain(s))
      throw Error(ErrorCode::DomainTooSmall,
                  "subset of size <= 2 outside the effective domain");
  UltrametricFn d(n);
  const Rational v0 = nu.at(0).value();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // d(i,j) = 2 q^{-e} with e = nu(ij) - nu(i) - nu(j) + nu(empty) <= 0
      const Rational e = nu.at((1u << i) | (1u << j)).value() -
                         nu.at(1u << i).value() - nu.at(1u << j).value() + v0;
      d.set(i, j, 2 * q_neg_pow(q, ExtValue(e)));
    }
  if (const auto bad = d.three_point_violation())
    throw NotUltrametricError((*bad)[0], (*bad)[1], (*bad)[2]);
  return d;
}

SetFunction duplicate_extend(const SetFunction& nu, const std::vector<int>& multiplicity) {
  const int n = nu.ground_size();
  if (static_cast<int>(multiplicity.size()) != n)
    throw Error(ErrorCode::BadSizes, "multiplicity vector must cover the ground set");
  std::vector<int> projection;  // copy position -> original element
  for (int e = 0; e < n; ++e) {
    if (multiplicity[e] < 0 || multiplicity[e] > 2)
      throw Error(ErrorCode::MultiplicityTooHigh, "multiplicities must be 0, 1 or 2");
    for (int c = 0; c < multiplicity[e]; ++c) projection.push_back(e);
  }
  const int m = static_cast<int>(projection.size());
  if (m < 1 || m > SetFunction::kMaxGround)
    throw Error(ErrorCode::CapExceeded, "extended ground set size out of range");
  std::vector<ExtValue> values(std::size_t{1} << m, ExtValue::neg_infinity());
  for (std::uint32_t s = 0; s < values.size(); ++s) {
    std::uint32_t image = 0;
    bool injective = true;
    for (int p = 0; p < m && injective; ++p) {
      if (!(s & (1u << p))) continue;
      const std::uint32_t bit = 1u << projection[p];
      if (image & bit)
        injective = false;
      else
        image |= bit;
    }
    if (injective) values[s] = nu.at(image);
  }
  return SetFunction(m, std::move(values));
}

}  // namespace ulc
