#include "nisub/center.hpp"
#include "nisub/error.hpp"
#include "nisub/hopf.hpp"

#include "sparse_acc.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nisub {

namespace {

/// Coefficient matrix C of a tensor, C[j][l] = coefficient of e_j (x) e_l,
/// returned as its columns (fixed right index) and rows (fixed left index).
void tensor_slices(const Tensor2& t, size_t n, std::vector<Vector>& by_right, std::vector<Vector>& by_left) {
  std::set<uint32_t> lefts, rights;
  for (const auto& [key, c] : t) {
    lefts.insert(key.first);
    rights.insert(key.second);
  }
  by_right.clear();
  by_left.clear();
  for (uint32_t r : rights) {
    Vector v = zero_vector(n);
    for (const auto& [key, c] : t) {
      if (key.second == r) v[key.first] = c;
    }
    by_right.push_back(std::move(v));
  }
  for (uint32_t l : lefts) {
    Vector v = zero_vector(n);
    for (const auto& [key, c] : t) {
      if (key.first == l) v[key.second] = c;
    }
    by_left.push_back(std::move(v));
  }
}

bool tensor_in(const Tensor2& t, const Subspace& k) {
  std::vector<Vector> cols, rows;
  tensor_slices(t, k.ambient_dim(), cols, rows);
  for (const auto& v : cols) {
    if (!k.contains(v)) return false;
  }
  for (const auto& v : rows) {
    if (!k.contains(v)) return false;
  }
  return true;
}

Vector coords_or_throw(const Subspace& s, const Vector& v, const char* what) {
  auto c = s.coordinates(v);
  if (!c) throw InvariantError(std::string(what) + ": element leaves the subspace");
  return *c;
}

/// Coordinates in s (x) s of a tensor known to lie in s (x) s.
Tensor2 tensor_coordinates(const Subspace& s, const Tensor2& t) {
  const auto& piv = s.pivots();
  std::vector<int> pos(s.ambient_dim(), -1);
  for (size_t a = 0; a < piv.size(); ++a) pos[piv[a]] = static_cast<int>(a);
  Tensor2 out;
  for (const auto& [key, c] : t) {
    if (pos[key.first] >= 0 && pos[key.second] >= 0) {
      out[{static_cast<uint32_t>(pos[key.first]), static_cast<uint32_t>(pos[key.second])}] = c;
    }
  }
  return out;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis() < b.basis();
}

/// {h in right : (g, h) = 0 for all g in s}, s inside pairing.left.
Subspace right_annihilator(const Subspace& s, const DualPairing& pairing) {
  std::vector<Vector> rows;
  Matrix ft = pairing.form.transpose();
  for (const auto& g : s.basis()) rows.push_back(ft.apply(g));
  return Subspace::span(pairing.form.cols(), nullspace(rows, pairing.form.cols()));
}

}  // namespace

bool is_subhopf(const Subspace& k, const HopfAlgebra& h) {
  if (k.ambient_dim() != h.dim()) throw PreconditionError("is_subhopf: subspace lives in a different dimension");
  if (k.dim() == 0 || !k.contains(h.unit())) return false;
  const auto& basis = k.basis();
  for (const auto& x : basis) {
    if (!k.contains(h.antipode(x)) || !k.contains(h.star(x))) return false;
  }
  for (const auto& x : basis)
    for (const auto& y : basis) {
      if (!k.contains(h.multiply(x, y))) return false;
    }
  for (const auto& x : basis) {
    if (!tensor_in(h.comultiply(x), k)) return false;
  }
  return true;
}

Subspace annihilator(const Subspace& k, const DualPairing& pairing) {
  const HopfAlgebra& left = *pairing.left;
  if (k.ambient_dim() != pairing.form.cols()) throw PreconditionError("annihilator: subspace does not live in the paired algebra");
  std::vector<Vector> rows;
  for (const auto& v : k.basis()) rows.push_back(pairing.form.apply(v));
  Subspace perp = Subspace::span(left.dim(), nullspace(rows, left.dim()));
  for (size_t a = 0; a < perp.dim(); ++a) {
    for (size_t i = 0; i < left.dim(); ++i) {
      Vector e = left.basis_vector(i);
      if (!perp.contains(left.multiply(perp.basis()[a], e)) || !perp.contains(left.multiply(e, perp.basis()[a]))) {
        throw InvariantError("annihilator is not a two-sided ideal: basis vector " + std::to_string(a) +
                             " times " + left.label(i) + " leaves it");
      }
    }
  }
  return perp;
}

Vector support_projection(const Subspace& k, const DualPairing& pairing) {
  const HopfAlgebra& left = *pairing.left;
  Subspace perp = annihilator(k, pairing);
  const size_t n = left.dim(), d = perp.dim();
  Vector p = zero_vector(n);
  if (d > 0) {
    const auto& b = perp.basis();
    // Unknown p = sum c_i b_i with p x = x = x p for every basis x of K^perp.
    Matrix m(2 * d * n, d);
    Vector rhs(2 * d * n);
    for (size_t j = 0; j < d; ++j)
      for (size_t i = 0; i < d; ++i) {
        Vector lx = left.multiply(b[i], b[j]);
        Vector rx = left.multiply(b[j], b[i]);
        for (size_t t = 0; t < n; ++t) {
          m((2 * j) * n + t, i) = lx[t];
          m((2 * j + 1) * n + t, i) = rx[t];
        }
      }
    for (size_t j = 0; j < d; ++j)
      for (size_t t = 0; t < n; ++t) rhs[(2 * j) * n + t] = rhs[(2 * j + 1) * n + t] = b[j][t];
    auto c = solve(m, rhs);
    if (!c) throw InvariantError("support_projection: the annihilator ideal has no identity");
    for (size_t i = 0; i < d; ++i) p = p + (*c)[i] * b[i];
  }
  Vector e = left.unit() - p;
  if (left.multiply(e, e) != e) throw InvariantError("support_projection: e_K is not idempotent");
  if (!is_central(e, left)) throw InvariantError("support_projection: e_K is not central");
  return e;
}

HopfAlgebra restrict_to_subhopf(const Subspace& k, const HopfAlgebra& h) {
  if (!is_subhopf(k, h)) throw PreconditionError("restrict_to_subhopf: subspace is not a subHopf algebra");
  const size_t m = k.dim();
  const auto& basis = k.basis();
  HopfAlgebra::Data d;
  d.dim = m;
  d.mult.resize(m * m);
  d.comult.resize(m);
  d.antipode.resize(m);
  d.star.resize(m);
  d.unit = coords_or_throw(k, h.unit(), "restrict");
  d.counit.resize(m);
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) d.mult[a * m + b] = to_sparse(coords_or_throw(k, h.multiply(basis[a], basis[b]), "restrict"));
    d.comult[a] = tensor_coordinates(k, h.comultiply(basis[a]));
    d.antipode[a] = to_sparse(coords_or_throw(k, h.antipode(basis[a]), "restrict"));
    d.star[a] = to_sparse(coords_or_throw(k, h.star(basis[a]), "restrict"));
    d.counit[a] = h.counit(basis[a]);
    auto sv = to_sparse(basis[a]);
    d.labels.push_back(sv.size() == 1 && sv[0].second == 1 ? h.label(sv[0].first) : "k" + std::to_string(a));
  }
  d.name = "sub(" + h.name() + ")";
  return HopfAlgebra(std::move(d));
}

ReducedDual reduced_dual(const Subspace& k, const DualPairing& pairing) {
  const HopfAlgebra& left = *pairing.left;
  const size_t n = left.dim();
  Vector e = support_projection(k, pairing);
  std::vector<Vector> gens;
  for (size_t i = 0; i < n; ++i) gens.push_back(left.multiply(e, left.basis_vector(i)));
  Subspace r = Subspace::span(n, std::move(gens));
  if (r.dim() != k.dim()) {
    throw InvariantError("reduced_dual: dim e_K H^* = " + std::to_string(r.dim()) + " differs from dim K = " +
                         std::to_string(k.dim()));
  }
  const size_t m = r.dim();
  const auto& y = r.basis();
  HopfAlgebra::Data d;
  d.dim = m;
  d.mult.resize(m * m);
  d.comult.resize(m);
  d.antipode.resize(m);
  d.star.resize(m);
  d.unit = coords_or_throw(r, e, "reduced_dual");
  d.counit.resize(m);
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) d.mult[a * m + b] = to_sparse(coords_or_throw(r, left.multiply(y[a], y[b]), "reduced_dual"));
    // Delta(y) (e_K (x) e_K)
    Tensor2 t = left.comultiply(y[a]);
    Tensor2 compressed;
    for (const auto& [key, c] : t) {
      Vector l = left.multiply(left.basis_vector(key.first), e);
      Vector rr = left.multiply(left.basis_vector(key.second), e);
      for (size_t i = 0; i < n; ++i) {
        if (sgn(l[i]) == 0) continue;
        for (size_t j = 0; j < n; ++j) {
          if (sgn(rr[j]) != 0) detail::add_to(compressed, static_cast<uint32_t>(i), static_cast<uint32_t>(j), c * l[i] * rr[j]);
        }
      }
    }
    if (!tensor_in(compressed, r)) throw InvariantError("reduced_dual: compressed coproduct leaves e_K H^* (x) e_K H^*");
    d.comult[a] = tensor_coordinates(r, compressed);
    d.antipode[a] = to_sparse(coords_or_throw(r, left.antipode(y[a]), "reduced_dual antipode"));
    d.star[a] = to_sparse(coords_or_throw(r, left.star(y[a]), "reduced_dual star"));
    d.counit[a] = left.counit(y[a]);
    d.labels.push_back("y" + std::to_string(a));
  }
  d.name = "e_K " + left.name();
  auto alg = std::make_shared<const HopfAlgebra>(std::move(d));
  auto sub = std::make_shared<const HopfAlgebra>(restrict_to_subhopf(k, *pairing.right));
  Matrix form(m, k.dim());
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < k.dim(); ++b) form(a, b) = pairing(y[a], k.basis()[b]);
  if (rank(form) != m) throw InvariantError("reduced_dual: induced pairing with K is degenerate");
  return {alg, r, e, DualPairing{alg, sub, form}};
}

NormalityCriteria is_normal_subhopf(const Subspace& k, const HopfAlgebra& h) {
  if (!is_subhopf(k, h)) throw PreconditionError("is_normal_subhopf: K is not a subHopf algebra");
  NormalityCriteria out;
  out.ad_invariant = true;
  for (size_t i = 0; i < h.dim() && out.ad_invariant; ++i) {
    Vector e = h.basis_vector(i);
    for (const auto& x : k.basis()) {
      AdjointPair ad = adjoint_actions(e, x, h);
      if (!k.contains(ad.left) || !k.contains(ad.right)) {
        out.ad_invariant = false;
        break;
      }
    }
  }
  Subspace ker_eps = Subspace::span(h.dim(), nullspace({h.counit()}, h.dim()));
  Subspace kplus = k.intersection(ker_eps);
  std::vector<Vector> left_gens, right_gens;
  for (size_t i = 0; i < h.dim(); ++i) {
    Vector e = h.basis_vector(i);
    for (const auto& x : kplus.basis()) {
      left_gens.push_back(h.multiply(e, x));
      right_gens.push_back(h.multiply(x, e));
    }
  }
  out.augmentation_criterion = Subspace::span(h.dim(), left_gens) == Subspace::span(h.dim(), right_gens);
  if (out.ad_invariant != out.augmentation_criterion) {
    throw InvariantError("is_normal_subhopf: adjoint invariance and H K+ = K+ H disagree");
  }
  return out;
}

Subspace group_subspace(const Group& g, const ElementSet& members) {
  std::vector<Vector> vs;
  for (Element e : members.elements()) vs.push_back(unit_vector(g.order(), e));
  return Subspace::span(g.order(), std::move(vs));
}

// ---------------------------------------------------------------------------
// Enumeration through central idempotents of the dual

namespace {

struct BlockData {
  DualResult dual;
  CentralBlocks blocks;
  std::vector<Subspace> coalgebras;  // C_i inside H
  /// Row vectors F^T g for g spanning z_k H^*: v has a C_k component iff some
  /// of them pairs nonzero with v.
  std::vector<std::vector<Vector>> detectors;
  size_t trivial = 0;
};

BlockData block_data(const HopfPtr& h, uint64_t seed) {
  BlockData bd;
  bd.dual = dual_hopf(h);
  const HopfAlgebra& l = *bd.dual.dual;
  bd.blocks = split_center(l, seed);
  bool found = false;
  for (size_t i = 0; i < bd.blocks.idempotents.size(); ++i) {
    const Vector& z = bd.blocks.idempotents[i];
    std::vector<Vector> comp;
    Vector one_minus = l.unit() - z;
    for (size_t t = 0; t < l.dim(); ++t) comp.push_back(l.multiply(one_minus, l.basis_vector(t)));
    bd.coalgebras.push_back(right_annihilator(Subspace::span(l.dim(), comp), bd.dual.pairing));
    std::vector<Vector> ideal;
    for (size_t t = 0; t < l.dim(); ++t) ideal.push_back(l.multiply(z, l.basis_vector(t)));
    Matrix ft = bd.dual.pairing.form.transpose();
    std::vector<Vector> det;
    Subspace ideal_space = Subspace::span(l.dim(), std::move(ideal));
    for (const auto& g : ideal_space.basis()) det.push_back(ft.apply(g));
    bd.detectors.push_back(std::move(det));
    if (sgn(l.counit(z)) != 0) {
      if (found) throw InvariantError("enumerate_subhopf: more than one block meets the counit");
      bd.trivial = i;
      found = true;
    }
  }
  if (!found) throw InvariantError("enumerate_subhopf: no block meets the counit");
  return bd;
}

Subspace union_of(const BlockData& bd, const std::vector<size_t>& set, size_t dim) {
  std::vector<Vector> vs;
  for (size_t i : set) {
    for (const auto& v : bd.coalgebras[i].basis()) vs.push_back(v);
  }
  return Subspace::span(dim, std::move(vs));
}

/// Blocks whose coalgebra carries a nonzero component of v.
std::vector<size_t> touched_blocks(const BlockData& bd, const Vector& v) {
  std::vector<size_t> out;
  for (size_t k = 0; k < bd.coalgebras.size(); ++k) {
    bool hit = false;
    for (const auto& w : bd.detectors[k]) {
      Rational s = 0;
      for (size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0) s += w[i] * v[i];
      }
      if (sgn(s) != 0) {
        hit = true;
        break;
      }
    }
    if (hit) out.push_back(k);
  }
  return out;
}

void sort_unique(std::vector<Subspace>& out) {
  std::sort(out.begin(), out.end(), subspace_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

std::vector<Subspace> enumerate_subhopf_exhaustive(const HopfPtr& h, uint64_t seed) {
  BlockData bd = block_data(h, seed);
  const size_t r = bd.coalgebras.size();
  if (r > 24) throw CapExceeded("enumerate_subhopf_exhaustive: too many blocks");
  std::vector<Subspace> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << r); ++mask) {
    std::vector<size_t> set;
    for (size_t i = 0; i < r; ++i) {
      if ((mask >> i) & 1u) set.push_back(i);
    }
    if (set.empty()) continue;
    Subspace k = union_of(bd, set, h->dim());
    if (is_subhopf(k, *h)) out.push_back(std::move(k));
  }
  sort_unique(out);
  return out;
}

std::vector<Subspace> enumerate_subhopf(const HopfPtr& h, const SubhopfOptions& options) {
  BlockData bd = block_data(h, options.seed);
  const size_t r = bd.coalgebras.size();
  // Closure rules: i, j in the set force every block touched by C_i C_j, and
  // i forces the blocks touched by S(C_i) and C_i*.
  std::vector<std::vector<size_t>> pair_rule(r * r), single_rule(r);
  for (size_t i = 0; i < r; ++i) {
    std::set<size_t> acc;
    for (const auto& v : bd.coalgebras[i].basis()) {
      for (size_t k : touched_blocks(bd, h->antipode(v))) acc.insert(k);
      for (size_t k : touched_blocks(bd, h->star(v))) acc.insert(k);
    }
    single_rule[i].assign(acc.begin(), acc.end());
    for (size_t j = 0; j < r; ++j) {
      std::vector<Vector> prods;
      for (const auto& x : bd.coalgebras[i].basis())
        for (const auto& y : bd.coalgebras[j].basis()) prods.push_back(h->multiply(x, y));
      Subspace p = Subspace::span(h->dim(), std::move(prods));
      std::set<size_t> hit;
      for (const auto& v : p.basis()) {
        for (size_t k : touched_blocks(bd, v)) hit.insert(k);
      }
      pair_rule[i * r + j].assign(hit.begin(), hit.end());
    }
  }
  auto closure = [&](std::vector<bool> in) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < r; ++i) {
        if (!in[i]) continue;
        for (size_t k : single_rule[i]) {
          if (!in[k]) in[k] = changed = true;
        }
        for (size_t j = 0; j < r; ++j) {
          if (!in[j]) continue;
          for (size_t k : pair_rule[i * r + j]) {
            if (!in[k]) in[k] = changed = true;
          }
        }
      }
    }
    return in;
  };
  std::vector<bool> start(r, false);
  start[bd.trivial] = true;
  std::set<std::vector<bool>> seen;
  std::deque<std::vector<bool>> queue;
  auto first = closure(start);
  seen.insert(first);
  queue.push_back(first);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (size_t b = 0; b < r; ++b) {
      if (cur[b]) continue;
      auto next = cur;
      next[b] = true;
      next = closure(next);
      if (seen.insert(next).second) {
        if (seen.size() > (size_t{1} << 20)) throw CapExceeded("enumerate_subhopf: candidate search exceeded 2^20 sets");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Subspace> out;
  for (const auto& in : seen) {
    std::vector<size_t> set;
    for (size_t i = 0; i < r; ++i) {
      if (in[i]) set.push_back(i);
    }
    Subspace k = union_of(bd, set, h->dim());
    if (is_subhopf(k, *h)) out.push_back(std::move(k));
  }
  sort_unique(out);
  if (options.brute_force_blocks != 0 && r <= options.brute_force_blocks) {
    if (out != enumerate_subhopf_exhaustive(h, options.seed)) {
      throw InvariantError("enumerate_subhopf: closure search disagrees with exhaustive search");
    }
  }
  return out;
}

}  // namespace nisub
