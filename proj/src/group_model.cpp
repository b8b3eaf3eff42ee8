#include "nisub/error.hpp"
#include "nisub/hopf.hpp"

#include <set>

namespace nisub {

namespace {

Vector convolve(const Group& g, const Vector& x, const Vector& y) {
  Vector out = zero_vector(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (Element b = 0; b < g.order(); ++b) {
      if (sgn(y[b]) != 0) out[g.mul(a, b)] += x[a] * y[b];
    }
  }
  return out;
}

Vector group_star(const Group& g, const Vector& x) {
  Vector out = zero_vector(g.order());
  for (Element a = 0; a < g.order(); ++a) out[g.inverse(a)] = x[a];
  return out;
}

}  // namespace

Vector jones_projection_of_subgroup(const Subgroup& h0) {
  const Group& g = h0.group();
  Vector e = zero_vector(g.order());
  const Rational w(1, static_cast<unsigned long>(h0.size()));
  for (Element h : h0.members().elements()) e[h] = w;
  if (convolve(g, e, e) != e || group_star(g, e) != e) {
    throw InvariantError("jones_projection_of_subgroup: subgroup average is not a projection");
  }
  return e;
}

Vector fourier_transform(const Group& g, const Vector& x) {
  if (x.size() != g.order()) throw PreconditionError("fourier_transform: dimension mismatch");
  Vector out = zero_vector(g.order());
  for (Element a = 0; a < g.order(); ++a) out[g.inverse(a)] = x[a];
  return out;
}

BischResult bisch_projection_test(const Group& g, const Vector& p) {
  if (p.size() != g.order()) throw PreconditionError("bisch_projection_test: dimension mismatch");
  if (convolve(g, p, p) != p) throw PreconditionError("bisch_projection_test: p is not idempotent");
  if (group_star(g, p) != p) throw PreconditionError("bisch_projection_test: p is not self-adjoint");
  BischResult out;
  Vector en(g.order(), Rational(1, static_cast<unsigned long>(g.order())));
  out.absorbs_e_n = convolve(g, p, en) == en;
  std::set<Rational> values;
  for (const auto& c : fourier_transform(g, p)) {
    if (sgn(c) != 0) values.insert(c);
  }
  out.two_valued = values.size() == 1;
  if (out.two_valued) out.lambda = *values.begin();
  return out;
}

}  // namespace nisub
