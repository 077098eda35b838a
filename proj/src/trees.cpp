#include "ulc/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace ulc {

namespace {

Rational rational_one() { return Rational(1); }

}  // namespace

UltrametricTree::UltrametricTree(int root_id, const std::vector<TreeEdge>& edges) {
  std::vector<int> all_ids{root_id};
  for (const auto& e : edges) {
    all_ids.push_back(e.parent);
    all_ids.push_back(e.child);
  }
  std::sort(all_ids.begin(), all_ids.end());
  all_ids.erase(std::unique(all_ids.begin(), all_ids.end()), all_ids.end());
  ids_ = std::move(all_ids);

  const int n = vertex_count();
  auto index_of = [&](int id) {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    return static_cast<int>(it - ids_.begin());
  };
  root_ = index_of(root_id);
  parent_.assign(n, -1);
  length_.assign(n, Rational(0));
  children_.assign(n, {});

  for (const auto& e : edges) {
    if (sgn(e.length) < 0)
      throw Error(ErrorCode::InvalidInput, "negative edge length");
    if (e.parent == e.child)
      throw Error(ErrorCode::InvalidInput, "self-loop edge");
    const int p = index_of(e.parent);
    const int c = index_of(e.child);
    if (c == root_) throw Error(ErrorCode::InvalidInput, "root listed as a child");
    if (parent_[c] != -1) throw Error(ErrorCode::InvalidInput, "vertex has two parents");
    parent_[c] = p;
    length_[c] = e.length;
    children_[p].push_back(c);
  }
  for (int v = 0; v < n; ++v) {
    if (v != root_ && parent_[v] == -1)
      throw Error(ErrorCode::InvalidInput, "disconnected vertex");
    std::sort(children_[v].begin(), children_[v].end());
  }

  // depths via one pass over a topological order; detects cycles
  depth_.assign(n, Rational(0));
  std::vector<int> order;
  order.reserve(n);
  order.push_back(root_);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int c : children_[order[k]]) order.push_back(c);
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorCode::InvalidInput, "edges do not form a rooted tree");
  for (int v : order)
    if (v != root_) depth_[v] = depth_[parent_[v]] + length_[v];

  height_.assign(n, Rational(0));
  leaves_below_.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (children_[v].empty()) {
      leaves_.push_back(v);
      leaves_below_[v] = 1;
      continue;
    }
    for (int c : children_[v]) {
      leaves_below_[v] += leaves_below_[c];
      height_[v] = std::max(height_[v], height_[c] + length_[c]);
    }
  }
  std::sort(leaves_.begin(), leaves_.end());

  radius_ = depth_[leaves_.front()];
  for (int l : leaves_)
    if (depth_[l] != radius_)
      throw Error(ErrorCode::InvalidInput, "leaves are not equidistant from the root");
}

const Rational& UltrametricTree::edge_length(int v) const {
  if (v == root_) throw Error(ErrorCode::BadIndices, "root has no parent edge");
  return length_[v];
}

int UltrametricTree::vertex_by_id(int id) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

int UltrametricTree::lca(int u, int v) const {
  std::vector<bool> seen(vertex_count(), false);
  for (int x = u; x != -1; x = parent_[x]) seen[x] = true;
  for (int x = v; x != -1; x = parent_[x])
    if (seen[x]) return x;
  return root_;
}

std::vector<TreeEdge> UltrametricTree::edge_list() const {
  std::vector<TreeEdge> edges;
  for (int v = 0; v < vertex_count(); ++v)
    if (v != root_) edges.push_back({ids_[parent_[v]], ids_[v], length_[v]});
  std::sort(edges.begin(), edges.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.child < b.child; });
  return edges;
}

SymMatrix leaf_distance_matrix(const UltrametricTree& t) {
  const auto& leaves = t.leaves();
  const int n = static_cast<int>(leaves.size());
  SymMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int a = t.lca(leaves[i], leaves[j]);
      d.set(i, j, t.depth(leaves[i]) + t.depth(leaves[j]) - 2 * t.depth(a));
    }
  return d;
}

UltrametricFn::UltrametricFn(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::BadSizes, "point set must be nonempty");
  entries_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

UltrametricFn::UltrametricFn(int n, std::vector<Rational> entries) : UltrametricFn(n) {
  if (entries.size() != entries_.size())
    throw Error(ErrorCode::BadSizes, "distance table must be n*n");
  entries_ = std::move(entries);
  for (int i = 0; i < n; ++i) {
    if (sgn(d(i, i)) != 0)
      throw Error(ErrorCode::InvalidInput, "nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (sgn(d(i, j)) < 0) throw Error(ErrorCode::InvalidInput, "negative distance");
      if (d(i, j) != d(j, i)) throw Error(ErrorCode::InvalidInput, "asymmetric distance");
    }
  }
}

void UltrametricFn::set(int i, int j, const Rational& v) {
  entries_[i * n_ + j] = v;
  entries_[j * n_ + i] = v;
}

std::optional<std::array<int, 3>> UltrametricFn::three_point_violation() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        const Rational& a = d(i, j);
        const Rational& b = d(j, k);
        const Rational& c = d(i, k);
        const Rational m = std::max({a, b, c});
        const int hits = (a == m) + (b == m) + (c == m);
        if (hits < 2) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

namespace {

struct LinkageBuilder {
  const UltrametricFn& d;
  std::vector<TreeEdge> edges;
  int next_id;

  explicit LinkageBuilder(const UltrametricFn& fn) : d(fn), next_id(fn.size()) {}

  // Returns (vertex id, height). Classes of "distance < diameter" are built
  // recursively, ordered by smallest member; internal ids follow creation
  // order, children before parents.
  std::pair<int, Rational> build(const std::vector<int>& pts) {
    if (pts.size() == 1) return {pts.front(), Rational(0)};
    Rational diameter(0);
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        diameter = std::max(diameter, d.d(pts[a], pts[b]));

    std::vector<std::vector<int>> classes;
    if (sgn(diameter) == 0) {
      for (int p : pts) classes.push_back({p});
    } else {
      std::vector<int> cls(pts.size(), -1);
      for (std::size_t a = 0; a < pts.size(); ++a) {
        if (cls[a] != -1) continue;
        const int c = static_cast<int>(classes.size());
        classes.emplace_back();
        std::vector<std::size_t> stack{a};
        cls[a] = c;
        while (!stack.empty()) {
          const std::size_t x = stack.back();
          stack.pop_back();
          classes[c].push_back(pts[x]);
          for (std::size_t y = 0; y < pts.size(); ++y)
            if (cls[y] == -1 && d.d(pts[x], pts[y]) < diameter) {
              cls[y] = c;
              stack.push_back(y);
            }
        }
        std::sort(classes[c].begin(), classes[c].end());
      }
    }

    std::vector<std::pair<int, Rational>> built;
    built.reserve(classes.size());
    for (const auto& cls_pts : classes) built.push_back(build(cls_pts));

    const Rational h = diameter / 2;
    const int node = next_id++;
    for (const auto& [child, child_h] : built)
      edges.push_back({node, child, h - child_h});
    return {node, h};
  }
};

}  // namespace

UltrametricTree tree_from_ultrametric(const UltrametricFn& d) {
  if (const auto bad = d.three_point_violation())
    throw NotUltrametricError((*bad)[0], (*bad)[1], (*bad)[2]);
  if (d.size() == 1) return UltrametricTree(0, {});
  std::vector<int> pts(d.size());
  std::iota(pts.begin(), pts.end(), 0);
  LinkageBuilder builder(d);
  const auto [root, h] = builder.build(pts);
  (void)h;
  return UltrametricTree(root, builder.edges);
}

UltrametricTree binarize(const UltrametricTree& t) {
  int next_id = t.id(t.vertex_count() - 1) + 1;  // ids are sorted ascending
  std::vector<TreeEdge> edges;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& kids = t.children(v);
    for (int c : kids)
      edges.push_back({t.id(v), t.id(c), t.edge_length(c)});
    if (kids.size() <= 2) continue;
    // Left-deep chain: the deepest new vertex adopts the first two children,
    // each next one adds a single child, all chained by zero-length edges.
    const int k = static_cast<int>(kids.size());
    std::vector<int> chain;  // chain[0] deepest ... chain[k-3], then v on top
    for (int step = 0; step < k - 2; ++step) chain.push_back(next_id++);
    auto reparent = [&edges, &t](int child, int new_parent) {
      for (auto& e : edges)
        if (e.child == t.id(child)) e.parent = new_parent;
    };
    reparent(kids[0], chain[0]);
    reparent(kids[1], chain[0]);
    for (int step = 2; step < k - 1; ++step) reparent(kids[step], chain[step - 1]);
    for (int step = 0; step + 1 < static_cast<int>(chain.size()); ++step)
      edges.push_back({chain[step + 1], chain[step], Rational(0)});
    edges.push_back({t.id(v), chain.back(), Rational(0)});
  }
  return UltrametricTree(t.id(t.root()), edges);
}

UpperSubtree UpperSubtree::of_ids(const UltrametricTree& t, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw Error(ErrorCode::InvalidInput, "upper subtree must be nonempty");
  UpperSubtree u{std::move(ids)};
  for (int id : u.ids) {
    const int v = t.vertex_by_id(id);
    if (v == -1) throw Error(ErrorCode::BadIndices, "unknown vertex id");
    if (v != t.root() && !u.contains(t.id(t.parent(v))))
      throw Error(ErrorCode::InvalidInput, "upper subtree is not ancestor-closed");
  }
  return u;
}

UpperSubtree UpperSubtree::whole_tree(const UltrametricTree& t) {
  std::vector<int> ids;
  for (int v = 0; v < t.vertex_count(); ++v) ids.push_back(t.id(v));
  return UpperSubtree{std::move(ids)};
}

bool UpperSubtree::contains(int id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

std::vector<int> u_min(const UltrametricTree& t, const UpperSubtree& u) {
  if (u.ids.empty())
    throw Error(ErrorCode::InvalidInput, "upper subtree must be nonempty");
  std::vector<int> minimal;
  for (int id : u.ids) {
    const int v = t.vertex_by_id(id);
    if (v == -1) throw Error(ErrorCode::BadIndices, "unknown vertex id");
    if (v != t.root() && !u.contains(t.id(t.parent(v))))
      throw Error(ErrorCode::InvalidInput, "upper subtree is not ancestor-closed");
    bool has_member_child = false;
    for (int c : t.children(v))
      if (u.contains(t.id(c))) {
        has_member_child = true;
        break;
      }
    if (!has_member_child) minimal.push_back(id);
  }
  return minimal;  // u.ids is sorted, so this is too
}

namespace {

void require_unit_radius(const UltrametricTree& t) {
  if (t.radius() != rational_one())
    throw Error(ErrorCode::WrongRadius, "radius must be exactly 1");
}

}  // namespace

SymMatrix a_matrix(const UltrametricTree& t, const UpperSubtree& u) {
  require_unit_radius(t);
  const auto minimal = u_min(t, u);
  const int m = static_cast<int>(minimal.size());
  long total = 0;
  std::vector<int> vtx(m), below(m);
  for (int k = 0; k < m; ++k) {
    vtx[k] = t.vertex_by_id(minimal[k]);
    below[k] = t.leaves_below(vtx[k]);
    total += below[k];
  }
  const Rational lead = 1 - Rational(1, total);
  SymMatrix a(m);
  for (int i = 0; i < m; ++i) {
    a.set(i, i, lead - (1 - Rational(1, below[i])) * t.height(vtx[i]));
    for (int j = i + 1; j < m; ++j)
      a.set(i, j, lead - t.height(t.lca(vtx[i], vtx[j])));
  }
  return a;
}

namespace {

// Removes h and the sibling subtree of i, fusing edges (g,h) and (h,i) into
// (g,i). Surviving vertices keep their ids.
UltrametricTree contract_through(const UltrametricTree& t, int g_id, int h_id, int i_id) {
  const int g = t.vertex_by_id(g_id);
  const int h = t.vertex_by_id(h_id);
  const int i = t.vertex_by_id(i_id);
  if (g < 0 || h < 0 || i < 0 || t.parent(i) != h || t.parent(h) != g)
    throw Error(ErrorCode::BadIndices, "not a grandparent-parent-leaf chain");
  std::vector<bool> removed(t.vertex_count(), false);
  removed[h] = true;
  std::vector<int> stack;
  for (int c : t.children(h))
    if (c != i) stack.push_back(c);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    removed[v] = true;
    for (int c : t.children(v)) stack.push_back(c);
  }
  std::vector<TreeEdge> edges;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v == t.root() || removed[v]) continue;
    if (v == i)
      edges.push_back({g_id, i_id, t.edge_length(h) + t.edge_length(i)});
    else if (!removed[t.parent(v)])
      edges.push_back({t.id(t.parent(v)), t.id(v), t.edge_length(v)});
  }
  return UltrametricTree(t.id(t.root()), edges);
}

std::vector<int> erase_ids(const std::vector<int>& ids, int a, int b) {
  std::vector<int> out;
  for (int id : ids)
    if (id != a && id != b) out.push_back(id);
  return out;
}

struct MergeData {
  int i, j, h;  // ids
  Rational delta_i, delta_j, pivot;
  Rational weight;  // n_i / n_h for the second replacement
  int pos_i, pos_j;
};

// Finds the preferred reduction case on (t, u): the smallest sibling pair of
// minimal elements, else the smallest minimal element whose sibling subtree
// is outside u.
struct CaseChoice {
  bool is_merge = false;
  MergeData merge{};
  int contract_i = -1, contract_h = -1, contract_g = -1;  // ids
};

CaseChoice choose_case(const UltrametricTree& t, const UpperSubtree& u,
                       const std::vector<int>& minimal) {
  CaseChoice choice;
  const int m = static_cast<int>(minimal.size());
  for (int a = 0; a < m; ++a) {
    const int va = t.vertex_by_id(minimal[a]);
    for (int b = a + 1; b < m; ++b) {
      const int vb = t.vertex_by_id(minimal[b]);
      if (t.parent(va) != t.parent(vb) || t.parent(va) == -1) continue;
      const int h = t.parent(va);
      if (t.children(h).size() != 2)
        throw Error(ErrorCode::InvalidInput, "merge requires a binary vertex");
      MergeData md;
      md.i = minimal[a];
      md.j = minimal[b];
      md.h = t.id(h);
      const Rational ni(t.leaves_below(va)), nj(t.leaves_below(vb));
      md.delta_i = (1 - 1 / ni) * (t.height(h) - t.height(va));
      md.delta_j = (1 - 1 / nj) * (t.height(h) - t.height(vb));
      md.pivot = (1 / ni + 1 / nj) * t.height(h);
      md.weight = ni / (ni + nj);
      md.pos_i = a;
      md.pos_j = b;
      choice.is_merge = true;
      choice.merge = md;
      return choice;
    }
  }
  for (int a = 0; a < m; ++a) {
    const int va = t.vertex_by_id(minimal[a]);
    const int h = t.parent(va);
    if (h == -1) continue;
    bool sibling_in_u = false;
    for (int c : t.children(h))
      if (c != va && u.contains(t.id(c))) sibling_in_u = true;
    if (sibling_in_u) continue;
    const int g = t.parent(h);
    if (g == -1)
      throw Error(ErrorCode::InvalidInput, "contraction reached the root");
    choice.contract_i = minimal[a];
    choice.contract_h = t.id(h);
    choice.contract_g = t.id(g);
    return choice;
  }
  throw Error(ErrorCode::InvalidInput, "no reduction case applies");
}

// Closes u upward in the binarized tree (only fresh chain vertices enter).
UpperSubtree lift_to_binarized(const UltrametricTree& bin, const UpperSubtree& u) {
  std::vector<bool> in(bin.vertex_count(), false);
  for (int id : u.ids) {
    int v = bin.vertex_by_id(id);
    if (v == -1) throw Error(ErrorCode::BadIndices, "unknown vertex id");
    while (v != -1 && !in[v]) {
      in[v] = true;
      v = bin.parent(v);
    }
  }
  std::vector<int> ids;
  for (int v = 0; v < bin.vertex_count(); ++v)
    if (in[v]) ids.push_back(bin.id(v));
  return UpperSubtree{std::move(ids)};
}

using Dense = std::vector<std::vector<Rational>>;

Dense to_dense(const SymMatrix& m) {
  Dense d(m.size(), std::vector<Rational>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
  return d;
}

void rowcol_sub(Dense& a, int dst, int src) {
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) a[dst][k] -= a[src][k];
  for (int k = 0; k < n; ++k) a[k][dst] -= a[k][src];
}

void rowcol_addmul(Dense& a, int dst, int src, const Rational& f) {
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) a[dst][k] += f * a[src][k];
  for (int k = 0; k < n; ++k) a[k][dst] += f * a[k][src];
}

// Applies the merge relaxation and the two row/column replacements; returns
// false if the transformed matrix is not [pivot] ⊕ a_matrix(t, u_next) under
// the id mapping that sends the j slot to h.
bool verify_merge(const UltrametricTree& t, const UpperSubtree& u,
                  const MergeData& md, const UpperSubtree& u_next) {
  const auto minimal = u_min(t, u);
  const SymMatrix a = a_matrix(t, u);
  if (sgn(md.delta_i) < 0 || sgn(md.delta_j) < 0 || sgn(md.pivot) < 0) return false;

  Dense w = to_dense(a);
  w[md.pos_i][md.pos_i] -= md.delta_i;
  w[md.pos_j][md.pos_j] -= md.delta_j;
  rowcol_sub(w, md.pos_i, md.pos_j);
  rowcol_addmul(w, md.pos_j, md.pos_i, md.weight);

  const int m = static_cast<int>(minimal.size());
  for (int k = 0; k < m; ++k) {
    const Rational expected = (k == md.pos_i) ? md.pivot : Rational(0);
    if (w[md.pos_i][k] != expected || w[k][md.pos_i] != expected) return false;
  }

  const auto next_minimal = u_min(t, u_next);
  const SymMatrix a_next = a_matrix(t, u_next);
  // slot -> id after dropping pos_i, with the j slot standing in for h
  std::vector<int> slot_id;
  for (int k = 0; k < m; ++k) {
    if (k == md.pos_i) continue;
    slot_id.push_back(k == md.pos_j ? md.h : minimal[k]);
  }
  auto next_pos = [&next_minimal](int id) {
    const auto it = std::lower_bound(next_minimal.begin(), next_minimal.end(), id);
    return (it != next_minimal.end() && *it == id)
               ? static_cast<int>(it - next_minimal.begin())
               : -1;
  };
  std::vector<int> rows;
  for (int k = 0; k < m; ++k)
    if (k != md.pos_i) rows.push_back(k);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) {
      const int pr = next_pos(slot_id[r]);
      const int pc = next_pos(slot_id[c]);
      if (pr < 0 || pc < 0) return false;
      if (w[rows[r]][rows[c]] != a_next(pr, pc)) return false;
    }
  return true;
}

}  // namespace

TreePsdCertificate certify_a_psd(const UltrametricTree& t, const UpperSubtree& u) {
  require_unit_radius(t);
  (void)a_matrix(t, u);  // validates u against t
  UltrametricTree work = binarize(t);
  UpperSubtree uw = lift_to_binarized(work, u);

  TreePsdCertificate cert;
  while (true) {
    const auto minimal = u_min(work, uw);
    if (minimal.size() == 1) {
      TreeReductionStep step;
      step.kind = TreeReductionStep::Kind::Base;
      step.i = minimal.front();
      step.pivot = a_matrix(work, uw)(0, 0);
      cert.pivots.push_back(step.pivot);
      cert.steps.push_back(std::move(step));
      return cert;
    }
    const auto choice = choose_case(work, uw, minimal);
    if (choice.is_merge) {
      const auto& md = choice.merge;
      TreeReductionStep step;
      step.kind = TreeReductionStep::Kind::Merge;
      step.i = md.i;
      step.j = md.j;
      step.h = md.h;
      step.delta_i = md.delta_i;
      step.delta_j = md.delta_j;
      step.pivot = md.pivot;
      cert.pivots.push_back(md.pivot);
      cert.steps.push_back(std::move(step));
      uw = UpperSubtree{erase_ids(uw.ids, md.i, md.j)};
    } else {
      TreeReductionStep step;
      step.kind = TreeReductionStep::Kind::Contract;
      step.i = choice.contract_i;
      step.h = choice.contract_h;
      step.g = choice.contract_g;
      cert.steps.push_back(std::move(step));
      work = contract_through(work, choice.contract_g, choice.contract_h,
                              choice.contract_i);
      uw = UpperSubtree{erase_ids(uw.ids, choice.contract_h, choice.contract_h)};
    }
  }
}

namespace {

bool replay_a_psd_impl(const UltrametricTree& t, const UpperSubtree& u,
                       const TreePsdCertificate& cert);

}  // namespace

bool replay_a_psd(const UltrametricTree& t, const UpperSubtree& u,
                  const TreePsdCertificate& cert) {
  try {
    return replay_a_psd_impl(t, u, cert);
  } catch (const Error&) {
    return false;  // malformed certificates fail verification
  }
}

namespace {

bool replay_a_psd_impl(const UltrametricTree& t, const UpperSubtree& u,
                       const TreePsdCertificate& cert) {
  if (t.radius() != rational_one()) return false;
  UltrametricTree work = binarize(t);
  UpperSubtree uw = lift_to_binarized(work, u);
  if (a_matrix(work, uw) != a_matrix(t, u)) return false;

  std::size_t pivot_at = 0;
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const auto& step = cert.steps[s];
    const auto minimal = u_min(work, uw);
    switch (step.kind) {
      case TreeReductionStep::Kind::Base: {
        if (s + 1 != cert.steps.size() || minimal.size() != 1) return false;
        const SymMatrix a = a_matrix(work, uw);
        if (a(0, 0) != step.pivot || sgn(step.pivot) < 0) return false;
        if (pivot_at >= cert.pivots.size() || cert.pivots[pivot_at] != step.pivot)
          return false;
        ++pivot_at;
        break;
      }
      case TreeReductionStep::Kind::Merge: {
        const int vi = work.vertex_by_id(step.i);
        const int vj = work.vertex_by_id(step.j);
        const int vh = work.vertex_by_id(step.h);
        if (vi < 0 || vj < 0 || vh < 0) return false;
        if (work.parent(vi) != vh || work.parent(vj) != vh) return false;
        if (work.children(vh).size() != 2) return false;
        MergeData md;
        md.i = step.i;
        md.j = step.j;
        md.h = step.h;
        md.delta_i = step.delta_i;
        md.delta_j = step.delta_j;
        md.pivot = step.pivot;
        const Rational ni(work.leaves_below(vi)), nj(work.leaves_below(vj));
        md.weight = ni / (ni + nj);
        const auto it_i = std::lower_bound(minimal.begin(), minimal.end(), step.i);
        const auto it_j = std::lower_bound(minimal.begin(), minimal.end(), step.j);
        if (it_i == minimal.end() || *it_i != step.i) return false;
        if (it_j == minimal.end() || *it_j != step.j) return false;
        md.pos_i = static_cast<int>(it_i - minimal.begin());
        md.pos_j = static_cast<int>(it_j - minimal.begin());
        // recompute the relaxation amounts and the pivot from the tree
        if (md.delta_i != (1 - 1 / ni) * (work.height(vh) - work.height(vi)))
          return false;
        if (md.delta_j != (1 - 1 / nj) * (work.height(vh) - work.height(vj)))
          return false;
        if (md.pivot != (1 / ni + 1 / nj) * work.height(vh)) return false;
        const UpperSubtree u_next{erase_ids(uw.ids, step.i, step.j)};
        if (!verify_merge(work, uw, md, u_next)) return false;
        if (pivot_at >= cert.pivots.size() || cert.pivots[pivot_at] != step.pivot)
          return false;
        ++pivot_at;
        uw = u_next;
        break;
      }
      case TreeReductionStep::Kind::Contract: {
        const SymMatrix before = a_matrix(work, uw);
        UltrametricTree next = contract_through(work, step.g, step.h, step.i);
        const UpperSubtree u_next{erase_ids(uw.ids, step.h, step.h)};
        if (a_matrix(next, u_next) != before) return false;
        work = std::move(next);
        uw = u_next;
        break;
      }
    }
  }
  return pivot_at == cert.pivots.size() && !cert.steps.empty() &&
         cert.steps.back().kind == TreeReductionStep::Kind::Base;
}

}  // namespace

CtResult c_t(const UltrametricTree& t, const Rational& tol) {
  require_unit_radius(t);
  if (sgn(tol) <= 0) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  const int n = t.leaf_count();
  const SymMatrix half_d = leaf_distance_matrix(t).scaled(Rational(1, 2));
  auto psd_at = [&](const Rational& c) {
    return is_psd(SymMatrix::constant(n, c) - half_d).psd;
  };

  CtResult result;
  const Rational bound = 1 - Rational(1, n);
  if (psd_at(Rational(0))) {
    result.lo = result.hi = 0;
    result.exact = true;
    result.degenerate = true;
    return result;
  }
  const Rational probe = bound - tol;
  if (sgn(probe) > 0 && !psd_at(probe) && classify(t).star_metric) {
    result.lo = result.hi = bound;
    result.exact = true;
    return result;
  }
  Rational lo(0), hi = bound;
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (psd_at(mid))
      hi = mid;
    else
      lo = mid;
  }
  result.lo = lo;
  result.hi = hi;
  return result;
}

TreeClass classify(const UltrametricTree& t) {
  require_unit_radius(t);
  TreeClass cls;
  cls.leaf_positive = true;
  for (int l : t.leaves())
    if (l != t.root() && sgn(t.edge_length(l)) == 0) cls.leaf_positive = false;
  cls.star_metric = true;
  const auto& leaves = t.leaves();
  for (std::size_t a = 0; a < leaves.size() && cls.star_metric; ++a)
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      const Rational h = t.height(t.lca(leaves[a], leaves[b]));
      if (sgn(h) != 0 && h != rational_one()) {
        cls.star_metric = false;
        break;
      }
    }
  return cls;
}

UltrametricTree rescaled_to_unit_radius(const UltrametricTree& t) {
  if (sgn(t.radius()) == 0)
    throw Error(ErrorCode::WrongRadius, "radius 0 tree cannot be normalized");
  auto edges = t.edge_list();
  for (auto& e : edges) e.length /= t.radius();
  return UltrametricTree(t.id(t.root()), edges);
}

}  // namespace ulc
