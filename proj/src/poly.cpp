#include "ulc/poly.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

namespace ulc {

namespace {

/// All alpha in the degree-d simplex on nvars variables, lexicographic.
void enumerate_simplex(int nvars, int degree, const std::function<void(const Exponent&)>& fn) {
  Exponent current(nvars, 0);
  // lex order: descending first coordinate? std::map uses ascending lex; we
  // generate ascending-lex directly by recursing on remaining weight.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nvars - 1) {
      current[pos] = remaining;
      fn(current);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (nvars == 0) return;
  rec(0, degree);
}

Rational exponent_factorial(const Exponent& e) {
  Integer f(1);
  for (int v : e) f *= factorial(static_cast<unsigned long>(v));
  return Rational(f);
}

}  // namespace

int exponent_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

HomogPoly::HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw Error(ErrorCode::BadSizes, "polynomial needs a variable");
  if (degree < 0) throw Error(ErrorCode::BadSizes, "negative degree");
}

void HomogPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(ErrorCode::BadSizes, "exponent length mismatch");
  for (int v : e)
    if (v < 0) throw Error(ErrorCode::InvalidInput, "negative exponent");
  if (exponent_degree(e) != degree_)
    throw Error(ErrorCode::DegreeMismatch, "exponent degree mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational HomogPoly::coeff(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> HomogPoly::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw Error(ErrorCode::DegreeMismatch, "shape mismatch in +");
  HomogPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw Error(ErrorCode::DegreeMismatch, "shape mismatch in -");
  HomogPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

HomogPoly HomogPoly::scaled(const Rational& c) const {
  HomogPoly r(nvars_, degree_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

HomogPoly partial(const HomogPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorCode::BadIndices, "bad variable");
  HomogPoly r(f.nvars(), std::max(f.degree() - 1, 0));
  if (f.degree() == 0) return r;
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

HomogPoly partial_multi(const HomogPoly& f, const Exponent& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars())
    throw Error(ErrorCode::BadSizes, "alpha length mismatch");
  if (exponent_degree(alpha) > f.degree())
    return HomogPoly(f.nvars(), 0);
  HomogPoly g = f;
  for (int v = 0; v < f.nvars(); ++v)
    for (int k = 0; k < alpha[v]; ++k) g = partial(g, v);
  return g;
}

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g) {
  if (f.nvars() != g.nvars())
    throw Error(ErrorCode::BadSizes, "variable count mismatch in *");
  HomogPoly r(f.nvars(), f.degree() + g.degree());
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) {
      Exponent e = ef;
      for (int v = 0; v < f.nvars(); ++v) e[v] += eg[v];
      r.add_term(e, cf * cg);
    }
  return r;
}

std::vector<HomogPoly> coefficient_slices(const HomogPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorCode::BadIndices, "bad variable");
  if (f.nvars() < 2)
    throw Error(ErrorCode::BadSizes, "slicing needs at least two variables");
  std::vector<HomogPoly> slices;
  for (int k = 0; k <= f.degree(); ++k)
    slices.emplace_back(f.nvars() - 1, f.degree() - k);
  for (const auto& [e, c] : f.terms()) {
    const int k = e[var];
    Exponent rest;
    rest.reserve(e.size() - 1);
    for (int v = 0; v < f.nvars(); ++v)
      if (v != var) rest.push_back(e[v]);
    slices[k].add_term(rest, c);
  }
  return slices;
}

HomogPoly specialize_bivariate(const HomogPoly& f, const std::vector<int>& block) {
  if (static_cast<int>(block.size()) != f.nvars())
    throw Error(ErrorCode::BadSizes, "block assignment length mismatch");
  for (int b : block)
    if (b != 0 && b != 1) throw Error(ErrorCode::InvalidInput, "blocks must be 0/1");
  HomogPoly r(2, f.degree());
  for (const auto& [e, c] : f.terms()) {
    Exponent be(2, 0);
    for (int v = 0; v < f.nvars(); ++v) be[block[v]] += e[v];
    r.add_term(be, c);
  }
  return r;
}

HomogPoly drop_variable(const HomogPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorCode::BadIndices, "bad variable");
  if (f.nvars() < 2)
    throw Error(ErrorCode::BadSizes, "cannot drop the only variable");
  HomogPoly r(f.nvars() - 1, f.degree());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] != 0)
      throw Error(ErrorCode::InvalidInput, "variable occurs in a term");
    Exponent rest;
    for (int v = 0; v < f.nvars(); ++v)
      if (v != var) rest.push_back(e[v]);
    r.add_term(rest, c);
  }
  return r;
}

MConvexVerdict is_mconvex_set(const std::vector<Exponent>& j_set, int nvars, int degree) {
  std::map<Exponent, bool> member;
  for (const auto& e : j_set) {
    if (static_cast<int>(e.size()) != nvars || exponent_degree(e) != degree)
      throw Error(ErrorCode::BadSizes, "point outside the simplex");
    for (int v : e)
      if (v < 0) throw Error(ErrorCode::InvalidInput, "negative exponent");
    member[e] = true;
  }
  std::vector<Exponent> sorted;
  for (const auto& [e, _] : member) sorted.push_back(e);

  for (const auto& alpha : sorted)
    for (const auto& beta : sorted)
      for (int i = 0; i < nvars; ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool ok = false;
        for (int j = 0; j < nvars && !ok; ++j) {
          if (beta[j] <= alpha[j]) continue;
          Exponent a2 = alpha, b2 = beta;
          --a2[i];
          ++a2[j];
          ++b2[i];
          --b2[j];
          if (member.count(a2) && member.count(b2)) ok = true;
        }
        if (!ok) return {false, MConvexWitness{alpha, beta, i}};
      }
  return {true, std::nullopt};
}

LorentzianVerdict is_lorentzian(const HomogPoly& f, long alpha_cap) {
  LorentzianVerdict verdict;
  for (const auto& [e, c] : f.terms())
    if (sgn(c) < 0) {
      verdict.ok = false;
      verdict.reason = LorentzianVerdict::Reason::NegativeCoefficient;
      verdict.monomial = e;
      return verdict;
    }
  const auto mc = is_mconvex_set(f.support(), f.nvars(), f.degree());
  if (!mc.ok) {
    verdict.ok = false;
    verdict.reason = LorentzianVerdict::Reason::SupportNotMConvex;
    verdict.exchange = mc.witness;
    return verdict;
  }
  if (f.degree() <= 1) {
    verdict.ok = true;
    return verdict;
  }

  const int n = f.nvars();
  const int d = f.degree();
  const Rational alpha_count = binomial(n + d - 3, d - 2);
  if (alpha_count > alpha_cap)
    throw Error(ErrorCode::CapExceeded,
                "codegree-2 simplex has " + rat_str(alpha_count) + " points");

  bool failed = false;
  LorentzianVerdict failure;
  enumerate_simplex(n, d - 2, [&](const Exponent& alpha) {
    if (failed) return;
    // Hessian of the alpha-derivative: entry (i,j) equals the coefficient of
    // x^{alpha+e_i+e_j} times (alpha+e_i+e_j)!.
    SymMatrix h(n);
    bool any = false;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Exponent beta = alpha;
        ++beta[i];
        ++beta[j];
        const Rational c = f.coeff(beta);
        if (sgn(c) == 0) continue;
        h.set(i, j, c * exponent_factorial(beta));
        any = true;
      }
    if (!any) return;
    const Inertia in = inertia(h);
    if (in.n_pos > 1) {
      failed = true;
      failure.ok = false;
      failure.reason = LorentzianVerdict::Reason::TooManyPositive;
      failure.alpha = alpha;
      failure.hessian_inertia = in;
    }
  });
  if (failed) return failure;
  verdict.ok = true;
  return verdict;
}

LorentzianVerdict is_lorentzian_bivariate(const HomogPoly& f) {
  if (f.nvars() != 2)
    throw Error(ErrorCode::BadSizes, "expected a bivariate polynomial");
  const int d = f.degree();
  LorentzianVerdict verdict;
  std::vector<Rational> norm(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    const Rational a = f.coeff({k, d - k});
    if (sgn(a) < 0) {
      verdict.ok = false;
      verdict.reason = LorentzianVerdict::Reason::NegativeCoefficient;
      verdict.monomial = {k, d - k};
      return verdict;
    }
    norm[k] = a / binomial(d, k);
  }
  int first = -1, last = -1;
  for (int k = 0; k <= d; ++k)
    if (sgn(norm[k]) > 0) {
      if (first < 0) first = k;
      last = k;
    }
  for (int k = first; k >= 0 && k <= last; ++k)
    if (sgn(norm[k]) == 0) {
      verdict.ok = false;
      verdict.reason = LorentzianVerdict::Reason::InternalZero;
      verdict.monomial = {k, d - k};
      return verdict;
    }
  for (int k = 1; k < d; ++k)
    if (norm[k] * norm[k] < norm[k - 1] * norm[k + 1]) {
      verdict.ok = false;
      verdict.reason = LorentzianVerdict::Reason::NotLogConcave;
      verdict.monomial = {k, d - k};
      return verdict;
    }
  verdict.ok = true;
  return verdict;
}

namespace {

HomogPoly generating_from_setfn(const SetFunction& nu, const Rational& q,
                                EvalMode mode, bool normalized) {
  const int n = nu.ground_size();
  HomogPoly f(n + 1, n);
  for (std::uint32_t s = 0; s <= nu.full_set(); ++s) {
    Rational c = q_neg_pow(q, nu.at(s), mode);
    if (sgn(c) == 0) continue;
    Exponent e(n + 1, 0);
    int size = 0;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) {
        e[v] = 1;
        ++size;
      }
    e[n] = n - size;
    if (normalized) c /= Rational(factorial(static_cast<unsigned long>(n - size)));
    f.add_term(e, c);
  }
  return f;
}

}  // namespace

HomogPoly z_poly(const SetFunction& nu, const Rational& q, EvalMode mode) {
  return generating_from_setfn(nu, q, mode, false);
}

HomogPoly nz_poly(const SetFunction& nu, const Rational& q, EvalMode mode) {
  return generating_from_setfn(nu, q, mode, true);
}

HomogPoly tutte_poly(const Matroid& m, const Rational& q) {
  const int n = m.ground_size();
  HomogPoly f(n + 1, n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const Rational c = q_neg_pow(q, ExtValue(rank(m, s)));
    Exponent e(n + 1, 0);
    int size = 0;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) {
        e[v] = 1;
        ++size;
      }
    e[n] = n - size;
    f.add_term(e, c);
  }
  return f;
}

HomogPoly indep_poly(const Matroid& m) {
  const int n = m.ground_size();
  HomogPoly f(n + 1, n);
  for (auto s : m.family()) {
    Exponent e(n + 1, 0);
    int size = 0;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) {
        e[v] = 1;
        ++size;
      }
    e[n] = n - size;
    f.add_term(e, Rational(1));
  }
  return f;
}

HomogPoly mconvex_poly(const MConvexFn& nu, const Rational& q, EvalMode mode) {
  HomogPoly f(nu.nvars, nu.degree);
  for (const auto& [alpha, value] : nu.values) {
    // q^{nu(alpha)} = q^{-(-nu(alpha))}
    const Rational c = q_neg_pow(q, ExtValue(-value), mode);
    f.add_term(alpha, c / exponent_factorial(alpha));
  }
  return f;
}

}  // namespace ulc
