#include "nisub/hopf.hpp"

#include "nisub/error.hpp"
#include "sparse_acc.hpp"

#include <algorithm>
#include <sstream>

namespace nisub {

using detail::Accumulator;
using detail::add_to;

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.emplace_back(static_cast<uint32_t>(i), v[i]);
  }
  return out;
}

Vector to_dense(const SparseVector& v, size_t dim) {
  Vector out(dim);
  for (const auto& [i, c] : v) out[i] += c;
  return out;
}

namespace {

void normalize(SparseVector& v, size_t dim, const std::string& what) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& [i, c] : v) {
    if (i >= dim) throw PreconditionError(what + ": basis index " + std::to_string(i) + " out of range");
    if (!out.empty() && out.back().first == i) {
      out.back().second += c;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else if (sgn(c) != 0) {
      out.emplace_back(i, c);
    }
  }
  v = std::move(out);
}

}  // namespace

HopfAlgebra::HopfAlgebra(Data data) : d_(std::move(data)) {
  size_t n = d_.dim;
  if (n == 0) throw PreconditionError("Hopf algebra dimension must be positive");
  if (d_.mult.size() != n * n) throw PreconditionError("multiplication tensor has wrong size");
  if (d_.comult.size() != n) throw PreconditionError("comultiplication tensor has wrong size");
  if (d_.unit.size() != n || d_.counit.size() != n) throw PreconditionError("unit or counit has wrong size");
  if (d_.antipode.size() != n || d_.star.size() != n) throw PreconditionError("antipode or star has wrong size");
  if (d_.labels.empty()) {
    for (size_t i = 0; i < n; ++i) d_.labels.push_back("e" + std::to_string(i));
  }
  if (d_.labels.size() != n) throw PreconditionError("label count does not match dimension");
  for (auto& v : d_.mult) normalize(v, n, "multiplication");
  for (auto& v : d_.antipode) normalize(v, n, "antipode");
  for (auto& v : d_.star) normalize(v, n, "star");
  for (auto& t : d_.comult) {
    for (const auto& [key, c] : t) {
      if (key.first >= n || key.second >= n) throw PreconditionError("comultiplication: basis index out of range");
    }
    detail::prune(t);
  }
}

Matrix HopfAlgebra::antipode_matrix() const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (const auto& [j, c] : d_.antipode[i]) m(j, i) = c;
  return m;
}

Matrix HopfAlgebra::star_matrix() const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (const auto& [j, c] : d_.star[i]) m(j, i) = c;
  return m;
}

Vector HopfAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw PreconditionError("multiply: dimension mismatch");
  Accumulator acc(dim());
  auto xs = to_sparse(x), ys = to_sparse(y);
  for (const auto& [i, a] : xs)
    for (const auto& [j, b] : ys) acc.add(product(i, j), a * b);
  return to_dense(acc.take(), dim());
}

Tensor2 HopfAlgebra::comultiply(const Vector& x) const {
  if (x.size() != dim()) throw PreconditionError("comultiply: dimension mismatch");
  Tensor2 out;
  for (const auto& [i, a] : to_sparse(x))
    for (const auto& [key, c] : coproduct(i)) add_to(out, key.first, key.second, a * c);
  return out;
}

Vector HopfAlgebra::antipode(const Vector& x) const {
  if (x.size() != dim()) throw PreconditionError("antipode: dimension mismatch");
  Accumulator acc(dim());
  for (const auto& [i, a] : to_sparse(x)) acc.add(d_.antipode[i], a);
  return to_dense(acc.take(), dim());
}

Vector HopfAlgebra::star(const Vector& x) const {
  if (x.size() != dim()) throw PreconditionError("star: dimension mismatch");
  Accumulator acc(dim());
  for (const auto& [i, a] : to_sparse(x)) acc.add(d_.star[i], a);
  return to_dense(acc.take(), dim());
}

Rational HopfAlgebra::counit(const Vector& x) const {
  if (x.size() != dim()) throw PreconditionError("counit: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < dim(); ++i) s += x[i] * d_.counit[i];
  return s;
}

bool HopfAlgebra::is_commutative() const {
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = i + 1; j < dim(); ++j) {
      if (product(i, j) != product(j, i)) return false;
    }
  return true;
}

bool HopfAlgebra::is_cocommutative() const {
  for (size_t i = 0; i < dim(); ++i) {
    for (const auto& [key, c] : coproduct(i)) {
      auto it = coproduct(i).find({key.second, key.first});
      if (it == coproduct(i).end() || it->second != c) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Axiom verification

bool AxiomReport::all_passed() const { return failure() == nullptr; }

const AxiomResult* AxiomReport::failure() const {
  for (const auto& r : results) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "pass  " : "FAIL  ") << r.name;
    if (!r.passed && !r.witness.empty()) {
      out << "  witness (";
      for (size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << r.witness[i];
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

using Tensor3 = std::map<std::array<uint32_t, 3>, Rational>;

void add_to3(Tensor3& t, std::array<uint32_t, 3> key, const Rational& c) {
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

Tensor2 tensor_product(const HopfAlgebra& h, const Tensor2& x, const Tensor2& y) {
  Tensor2 out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const auto& left = h.product(kx.first, ky.first);
      if (left.empty()) continue;
      const auto& right = h.product(kx.second, ky.second);
      for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right) add_to(out, a, b, cx * cy * ca * cb);
    }
  return out;
}

SparseVector unit_sparse(const HopfAlgebra& h) { return to_sparse(h.unit()); }

/// Runs `check(i)` (or over pairs/triples) and records the first failing index tuple.
class Recorder {
 public:
  explicit Recorder(AxiomReport& report) : report_(report) {}
  AxiomResult& begin(const std::string& name) {
    report_.results.push_back({name, true, {}});
    return report_.results.back();
  }

 private:
  AxiomReport& report_;
};

}  // namespace

AxiomReport verify_hopf_axioms(const HopfAlgebra& h) {
  const size_t n = h.dim();
  const auto n32 = static_cast<uint32_t>(n);
  AxiomReport report;
  Recorder rec(report);
  Accumulator acc(n), acc2(n);
  const SparseVector one = unit_sparse(h);

  {
    auto& r = rec.begin("associativity");
    for (uint32_t i = 0; i < n32 && r.passed; ++i)
      for (uint32_t j = 0; j < n32 && r.passed; ++j) {
        const auto& ij = h.product(i, j);
        for (uint32_t k = 0; k < n32; ++k) {
          for (const auto& [m, c] : ij) acc.add(h.product(m, k), c);
          for (const auto& [m, c] : h.product(j, k)) acc2.add(h.product(i, m), c);
          if (acc.take() != acc2.take()) {
            r.passed = false;
            r.witness = {i, j, k};
            break;
          }
        }
      }
  }
  {
    auto& r = rec.begin("unit");
    for (uint32_t i = 0; i < n32 && r.passed; ++i) {
      for (const auto& [m, c] : one) {
        acc.add(h.product(m, i), c);
        acc2.add(h.product(i, m), c);
      }
      SparseVector ei{{i, Rational(1)}};
      if (acc.take() != ei || acc2.take() != ei) {
        r.passed = false;
        r.witness = {i};
      }
    }
  }
  {
    auto& r = rec.begin("coassociativity");
    for (uint32_t i = 0; i < n32 && r.passed; ++i) {
      Tensor3 left, right;
      for (const auto& [key, c] : h.coproduct(i)) {
        for (const auto& [k2, c2] : h.coproduct(key.first)) add_to3(left, {k2.first, k2.second, key.second}, c * c2);
        for (const auto& [k2, c2] : h.coproduct(key.second)) add_to3(right, {key.first, k2.first, k2.second}, c * c2);
      }
      if (left != right) {
        r.passed = false;
        r.witness = {i};
      }
    }
  }
  {
    auto& r = rec.begin("counit");
    for (uint32_t i = 0; i < n32 && r.passed; ++i) {
      for (const auto& [key, c] : h.coproduct(i)) {
        acc.add(key.second, c * h.counit()[key.first]);
        acc2.add(key.first, c * h.counit()[key.second]);
      }
      SparseVector ei{{i, Rational(1)}};
      if (acc.take() != ei || acc2.take() != ei) {
        r.passed = false;
        r.witness = {i};
      }
    }
  }
  {
    auto& r = rec.begin("comultiplication is multiplicative");
    Tensor2 want;
    for (const auto& [a, ca] : one)
      for (const auto& [b, cb] : one) add_to(want, a, b, ca * cb);
    if (h.comultiply(h.unit()) != want) r.passed = false;
    for (uint32_t i = 0; i < n32 && r.passed; ++i)
      for (uint32_t j = 0; j < n32 && r.passed; ++j) {
        Tensor2 lhs;
        for (const auto& [m, c] : h.product(i, j))
          for (const auto& [key, c2] : h.coproduct(m)) add_to(lhs, key.first, key.second, c * c2);
        if (lhs != tensor_product(h, h.coproduct(i), h.coproduct(j))) {
          r.passed = false;
          r.witness = {i, j};
        }
      }
  }
  {
    auto& r = rec.begin("counit is multiplicative");
    if (h.counit(h.unit()) != 1) r.passed = false;
    for (uint32_t i = 0; i < n32 && r.passed; ++i)
      for (uint32_t j = 0; j < n32 && r.passed; ++j) {
        Rational lhs = 0;
        for (const auto& [m, c] : h.product(i, j)) lhs += c * h.counit()[m];
        if (lhs != h.counit()[i] * h.counit()[j]) {
          r.passed = false;
          r.witness = {i, j};
        }
      }
  }
  {
    auto& r = rec.begin("antipode");
    for (uint32_t i = 0; i < n32 && r.passed; ++i) {
      for (const auto& [key, c] : h.coproduct(i)) {
        for (const auto& [s, cs] : h.antipode_of(key.first)) acc.add(h.product(s, key.second), c * cs);
        for (const auto& [s, cs] : h.antipode_of(key.second)) acc2.add(h.product(key.first, s), c * cs);
      }
      for (const auto& [m, c] : one) acc.add(m, -c * h.counit()[i]);
      for (const auto& [m, c] : one) acc2.add(m, -c * h.counit()[i]);
      if (!acc.take().empty() || !acc2.take().empty()) {
        r.passed = false;
        r.witness = {i};
      }
    }
  }
  {
    auto& r = rec.begin("star is involutive");
    for (uint32_t i = 0; i < n32 && r.passed; ++i) {
      for (const auto& [m, c] : h.star_of(i)) acc.add(h.star_of(m), c);
      if (acc.take() != SparseVector{{i, Rational(1)}}) {
        r.passed = false;
        r.witness = {i};
      }
    }
  }
  {
    auto& r = rec.begin("star is antimultiplicative");
    for (uint32_t i = 0; i < n32 && r.passed; ++i)
      for (uint32_t j = 0; j < n32 && r.passed; ++j) {
        for (const auto& [m, c] : h.product(i, j)) acc.add(h.star_of(m), c);
        for (const auto& [a, ca] : h.star_of(j))
          for (const auto& [b, cb] : h.star_of(i)) acc2.add(h.product(a, b), ca * cb);
        if (acc.take() != acc2.take()) {
          r.passed = false;
          r.witness = {i, j};
        }
      }
  }
  {
    auto& r = rec.begin("star respects comultiplication");
    for (uint32_t i = 0; i < n32 && r.passed; ++i) {
      Tensor2 lhs, rhs;
      for (const auto& [m, c] : h.star_of(i))
        for (const auto& [key, c2] : h.coproduct(m)) add_to(lhs, key.first, key.second, c * c2);
      for (const auto& [key, c] : h.coproduct(i))
        for (const auto& [a, ca] : h.star_of(key.first))
          for (const auto& [b, cb] : h.star_of(key.second)) add_to(rhs, a, b, c * ca * cb);
      if (lhs != rhs) {
        r.passed = false;
        r.witness = {i};
      }
    }
  }
  {
    auto& r = rec.begin("S * S * = id");
    for (uint32_t i = 0; i < n32 && r.passed; ++i) {
      Vector x = h.basis_vector(i);
      Vector y = h.antipode(h.star(h.antipode(h.star(x))));
      if (y != x) {
        r.passed = false;
        r.witness = {i};
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

HopfAlgebra group_algebra(const Group& g) {
  const size_t n = g.order();
  HopfAlgebra::Data d;
  d.dim = n;
  d.mult.resize(n * n);
  d.comult.resize(n);
  d.antipode.resize(n);
  d.star.resize(n);
  d.unit = unit_vector(n, g.identity());
  d.counit.assign(n, Rational(1));
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b) d.mult[a * n + b] = {{g.mul(a, b), Rational(1)}};
    d.comult[a][{a, a}] = 1;
    d.antipode[a] = {{g.inverse(a), Rational(1)}};
    d.star[a] = {{g.inverse(a), Rational(1)}};
    d.labels.push_back("u[" + g.label(a) + "]");
  }
  d.name = "C[" + (g.name().empty() ? std::string("G") : g.name()) + "]";
  return HopfAlgebra(std::move(d));
}

Rational DualPairing::operator()(const Vector& f, const Vector& h) const {
  if (f.size() != form.rows() || h.size() != form.cols()) throw PreconditionError("pairing: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) == 0) continue;
    for (size_t j = 0; j < h.size(); ++j) s += f[i] * form(i, j) * h[j];
  }
  return s;
}

DualResult dual_hopf(const HopfPtr& h) {
  const size_t n = h->dim();
  HopfAlgebra::Data d;
  d.dim = n;
  d.mult.resize(n * n);
  d.comult.resize(n);
  d.antipode.resize(n);
  d.star.resize(n);
  // mult of the dual is the transpose of the comultiplication and vice versa.
  for (uint32_t i = 0; i < n; ++i) {
    for (const auto& [key, c] : h->coproduct(i)) d.mult[key.first * n + key.second].emplace_back(i, c);
    for (uint32_t j = 0; j < n; ++j)
      for (const auto& [k, c] : h->product(i, j)) d.comult[k][{i, j}] += c;
    for (const auto& [j, c] : h->antipode_of(i)) d.antipode[j].emplace_back(i, c);
  }
  // f*(x) = f(S(x)*): the transpose of x -> S(x)*.
  for (uint32_t i = 0; i < n; ++i) {
    Vector img = h->star(h->antipode(h->basis_vector(i)));
    for (uint32_t j = 0; j < n; ++j) {
      if (sgn(img[j]) != 0) d.star[j].emplace_back(i, img[j]);
    }
  }
  d.unit = h->counit();
  d.counit = h->unit();
  for (size_t i = 0; i < n; ++i) d.labels.push_back("d[" + h->label(i) + "]");
  d.name = h->name() + "^*";
  auto dual = std::make_shared<const HopfAlgebra>(std::move(d));
  return {dual, DualPairing{dual, h, Matrix::identity(n)}};
}

HopfAlgebra bicrossed_product(const MatchedPair& mp) {
  const Group& g = *mp.group();
  const auto& as = mp.a_elements();
  const auto& bs = mp.b_elements();
  const size_t na = as.size(), nb = bs.size(), n = na * nb;
  auto idx = [&](Element a, Element b) { return static_cast<uint32_t>(mp.a_position(a) * nb + mp.b_position(b)); };
  // a > b = alpha(a, b) in B, a < b = beta(b, a) in A.
  auto act = [&](Element a, Element b) { return mp.alpha(a, b); };
  auto react = [&](Element a, Element b) { return mp.beta(b, a); };

  HopfAlgebra::Data d;
  d.dim = n;
  d.mult.resize(n * n);
  d.comult.resize(n);
  d.antipode.resize(n);
  d.star.resize(n);
  d.unit = zero_vector(n);
  d.counit = zero_vector(n);
  for (Element a : as) d.unit[idx(a, g.identity())] = 1;
  for (Element a : as)
    for (Element b : bs) {
      uint32_t x = idx(a, b);
      if (a == g.identity()) d.counit[x] = 1;
      Element binv = g.inverse(b);
      for (Element a2 : as) {
        if (a != react(a2, binv)) continue;
        for (Element b2 : bs) d.mult[static_cast<size_t>(x) * n + idx(a2, b2)] = {{idx(a, g.mul(b, b2)), Rational(1)}};
      }
      for (Element a1 : as) {
        Element a2 = g.mul(g.inverse(a1), a);
        d.comult[x][{idx(a1, act(a2, b)), idx(a2, b)}] += 1;
      }
      Element t = act(a, b);
      d.antipode[x] = {{idx(react(g.inverse(a), t), g.inverse(t)), Rational(1)}};
      d.star[x] = {{idx(react(a, b), binv), Rational(1)}};
      d.labels.push_back("d[" + g.label(a) + "]#" + g.label(b));
    }
  d.name = "bicrossed(" + mp.a().label() + ", " + mp.b().label() + ")";
  return HopfAlgebra(std::move(d));
}

bool is_hopf_isomorphism(const HopfAlgebra& from, const HopfAlgebra& to, const Matrix& phi) {
  const size_t n = from.dim();
  if (to.dim() != n || phi.rows() != n || phi.cols() != n) return false;
  if (rank(phi) != n) return false;
  std::vector<Vector> img(n);
  for (size_t i = 0; i < n; ++i) img[i] = phi.column(i);
  if (phi.apply(from.unit()) != to.unit()) return false;
  for (size_t i = 0; i < n; ++i) {
    if (to.counit(img[i]) != from.counit()[i]) return false;
    if (phi.apply(from.antipode(from.basis_vector(i))) != to.antipode(img[i])) return false;
    if (phi.apply(from.star(from.basis_vector(i))) != to.star(img[i])) return false;
    Tensor2 lhs;
    for (const auto& [key, c] : from.coproduct(i))
      for (size_t a = 0; a < n; ++a) {
        if (sgn(img[key.first][a]) == 0) continue;
        for (size_t b = 0; b < n; ++b) {
          if (sgn(img[key.second][b]) == 0) continue;
          add_to(lhs, static_cast<uint32_t>(a), static_cast<uint32_t>(b), c * img[key.first][a] * img[key.second][b]);
        }
      }
    if (lhs != to.comultiply(img[i])) return false;
    for (size_t j = 0; j < n; ++j) {
      if (phi.apply(to_dense(from.product(i, j), n)) != to.multiply(img[i], img[j])) return false;
    }
  }
  return true;
}

bool is_central(const Vector& x, const HopfAlgebra& h) {
  if (x.size() != h.dim()) throw PreconditionError("is_central: dimension mismatch");
  for (size_t i = 0; i < h.dim(); ++i) {
    Vector e = h.basis_vector(i);
    if (h.multiply(x, e) != h.multiply(e, x)) return false;
  }
  return true;
}

AdjointPair adjoint_actions(const Vector& hv, const Vector& k, const HopfAlgebra& alg) {
  if (hv.size() != alg.dim() || k.size() != alg.dim()) throw PreconditionError("adjoint_actions: dimension mismatch");
  AdjointPair out{zero_vector(alg.dim()), zero_vector(alg.dim())};
  for (const auto& [key, c] : alg.comultiply(hv)) {
    Vector h1 = alg.basis_vector(key.first), h2 = alg.basis_vector(key.second);
    out.left = out.left + c * alg.multiply(alg.multiply(h1, k), alg.antipode(h2));
    out.right = out.right + c * alg.multiply(alg.multiply(alg.antipode(h1), k), h2);
  }
  return out;
}

}  // namespace nisub
