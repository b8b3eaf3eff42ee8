#include "nisub/center.hpp"

#include "nisub/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace nisub {

Subspace algebra_center(const HopfAlgebra& h) {
  const size_t n = h.dim();
  // Row (j, k): coefficient of e_k in e_i e_j - e_j e_i, as a function of i.
  std::set<std::vector<std::pair<size_t, Rational>>> seen;
  std::vector<Vector> rows;
  for (size_t j = 0; j < n; ++j) {
    std::vector<Vector> block(n, zero_vector(n));
    std::vector<bool> touched(n, false);
    for (size_t i = 0; i < n; ++i) {
      for (const auto& [k, c] : h.product(i, j)) {
        block[k][i] += c;
        touched[k] = true;
      }
      for (const auto& [k, c] : h.product(j, i)) {
        block[k][i] -= c;
        touched[k] = true;
      }
    }
    for (size_t k = 0; k < n; ++k) {
      if (!touched[k] || is_zero(block[k])) continue;
      std::vector<std::pair<size_t, Rational>> key;
      for (size_t i = 0; i < n; ++i) {
        if (sgn(block[k][i]) != 0) key.emplace_back(i, block[k][i]);
      }
      if (seen.insert(key).second) rows.push_back(std::move(block[k]));
    }
  }
  return Subspace::span(n, nullspace(rows, n));
}

Vector evaluate_in(const HopfAlgebra& h, const Polynomial& p, const Vector& x) {
  Vector acc = zero_vector(h.dim());
  for (int d = p.degree(); d >= 0; --d) {
    acc = h.multiply(acc, x) + p.coefficient(static_cast<size_t>(d)) * h.unit();
  }
  return acc;
}

Polynomial minimal_polynomial(const HopfAlgebra& h, const Vector& x) {
  const size_t n = h.dim();
  // Incremental elimination of the powers 1, x, x^2, ... keeping, for each
  // stored row, its expression in terms of the powers.
  std::vector<Vector> rows;
  std::vector<size_t> pivots;
  std::vector<std::vector<Rational>> combos;
  Vector power = h.unit();
  for (size_t k = 0; k <= n; ++k) {
    Vector r = power;
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (size_t t = 0; t < rows.size(); ++t) {
      const Rational f = r[pivots[t]];
      if (sgn(f) == 0) continue;
      for (size_t i = 0; i < n; ++i) {
        if (sgn(rows[t][i]) != 0) r[i] -= f * rows[t][i];
      }
      for (size_t i = 0; i < combos[t].size(); ++i) combo[i] -= f * combos[t][i];
    }
    auto piv = std::find_if(r.begin(), r.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (piv == r.end()) return Polynomial(combo).monic();
    const size_t p = static_cast<size_t>(piv - r.begin());
    const Rational inv = 1 / r[p];
    for (auto& q : r) q *= inv;
    for (auto& q : combo) q *= inv;
    rows.push_back(std::move(r));
    pivots.push_back(p);
    combos.push_back(std::move(combo));
    power = h.multiply(power, x);
  }
  throw InvariantError("minimal_polynomial: no dependency among the first dim + 1 powers");
}

CentralBlocks split_center(const HopfAlgebra& h, uint64_t seed) {
  const Subspace z = algebra_center(h);
  const size_t m = z.dim();
  std::mt19937_64 rng(seed);
  const long bound = static_cast<long>(4 * m + 4);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  CentralBlocks out;
  for (size_t attempt = 1; attempt <= 64; ++attempt) {
    out.attempts = attempt;
    Vector x = zero_vector(h.dim());
    for (const auto& b : z.basis()) x = x + Rational(coeff(rng)) * b;
    Polynomial p = minimal_polynomial(h, x);
    if (static_cast<size_t>(p.degree()) < m) continue;
    if (gcd(p, p.derivative()).degree() > 0) throw InvariantError("split_center: the center is not semisimple");
    std::vector<Polynomial> factors = factor_squarefree(p);
    for (const auto& f : factors) {
      Polynomial q = divmod(p, f).first;
      ExtendedGcd eg = extended_gcd(q, f);
      if (eg.g.degree() != 0) throw InvariantError("split_center: factors are not coprime");
      Polynomial lift = divmod(eg.s * q, p).second;
      out.idempotents.push_back(evaluate_in(h, lift, x));
      out.degrees.push_back(static_cast<size_t>(f.degree()));
    }
    // Canonical order independent of the random element.
    std::vector<size_t> order(out.idempotents.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return out.idempotents[a] < out.idempotents[b]; });
    CentralBlocks sorted;
    sorted.attempts = attempt;
    for (size_t i : order) {
      sorted.idempotents.push_back(out.idempotents[i]);
      sorted.degrees.push_back(out.degrees[i]);
    }
    Vector total = zero_vector(h.dim());
    for (size_t i = 0; i < sorted.idempotents.size(); ++i) {
      const Vector& e = sorted.idempotents[i];
      total = total + e;
      if (h.multiply(e, e) != e) throw InvariantError("split_center: block element is not idempotent");
      for (size_t j = i + 1; j < sorted.idempotents.size(); ++j) {
        if (!is_zero(h.multiply(e, sorted.idempotents[j]))) throw InvariantError("split_center: blocks are not orthogonal");
      }
    }
    if (total != h.unit()) throw InvariantError("split_center: blocks do not sum to the unit");
    return sorted;
  }
  throw CapExceeded("split_center: no random central element split the center after 64 draws");
}

}  // namespace nisub
