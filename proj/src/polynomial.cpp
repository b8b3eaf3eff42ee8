#include "nisub/polynomial.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <stdexcept>

namespace nisub {

namespace mp = boost::multiprecision;

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> r = coeffs_;
  for (auto& c : r) c *= s;
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (sgn(coeffs_[i]) == 0) continue;
    Rational c = coeffs_[i];
    if (!out.empty()) {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    } else if (sgn(c) < 0) {
      out += "-";
      c = abs(c);
    }
    if (c != 1 || i == 0) out += c.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db + 1), Rational(0));
  Rational inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = rem[static_cast<size_t>(k + db)] * inv;
    quo[static_cast<size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= f * b.coefficient(static_cast<size_t>(j));
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return extended_gcd(a, b).g; }

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

using Real = mp::cpp_bin_float_100;
using Complex = mp::cpp_complex_100;

// Monic integer polynomial, low degree first.
using IntPoly = std::vector<Integer>;

IntPoly to_monic_integer(const Polynomial& monic_p, Integer& scale) {
  // p(x) monic; q(y) = c^n p(y / c) is monic and integral when c clears all
  // denominators.
  scale = 1;
  for (const auto& c : monic_p.coefficients()) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    scale = g;
  }
  size_t n = static_cast<size_t>(monic_p.degree());
  IntPoly q(n + 1);
  Integer power = 1;
  for (size_t k = 0; k <= n; ++k) {
    // coefficient of y^(n-k) is c^k * a_{n-k}
    Rational v = monic_p.coefficient(n - k) * Rational(power);
    if (v.get_den() != 1) throw std::logic_error("to_monic_integer: scale failed");
    q[n - k] = v.get_num();
    power *= scale;
  }
  return q;
}

Polynomial from_monic_integer(const IntPoly& q, const Integer& scale) {
  // p(x) = c^{-n} q(c x)
  size_t n = q.size() - 1;
  std::vector<Rational> coeffs(n + 1);
  Integer power = 1;
  for (size_t i = 0; i <= n; ++i) {
    coeffs[i] = Rational(q[i] * power);
    power *= scale;
  }
  Polynomial p(std::move(coeffs));
  return p.monic();
}

// Exact division of monic integer polynomials; returns false if d does not divide p.
bool divide_exact(const IntPoly& p, const IntPoly& d, IntPoly& quotient) {
  size_t n = p.size() - 1, m = d.size() - 1;
  if (m > n) return false;
  IntPoly rem = p;
  quotient.assign(n - m + 1, Integer(0));
  for (size_t k = n - m + 1; k-- > 0;) {
    Integer f = rem[k + m];
    quotient[k] = f;
    if (f == 0) continue;
    for (size_t j = 0; j <= m; ++j) rem[k + j] -= f * d[j];
  }
  for (size_t j = 0; j < m; ++j) {
    if (rem[j] != 0) return false;
  }
  return true;
}

std::vector<Complex> approximate_roots(const IntPoly& q) {
  size_t n = q.size() - 1;
  std::vector<Complex> coeff(n + 1);
  for (size_t i = 0; i <= n; ++i) coeff[i] = Complex(Real(q[i].get_str()));
  Real bound = 0;
  for (size_t i = 0; i < n; ++i) bound = std::max(bound, Real(abs(coeff[i].real())));
  bound += 1;
  // Durand-Kerner from points on a circle of radius ~ Cauchy bound.
  std::vector<Complex> z(n);
  Complex seed(Real("0.4"), Real("0.9"));
  Complex radius(bound < 2 ? Real(1) : Real(sqrt(bound)), 0);
  Complex w = Complex(1, 0);
  for (size_t i = 0; i < n; ++i) {
    z[i] = radius * w;
    w *= seed;
  }
  auto eval = [&](const Complex& x) {
    Complex acc(0, 0);
    for (size_t i = n + 1; i-- > 0;) acc = acc * x + coeff[i];
    return acc;
  };
  const Real tol("1e-80");
  for (int iter = 0; iter < 5000; ++iter) {
    Real change = 0;
    for (size_t i = 0; i < n; ++i) {
      Complex denom(1, 0);
      for (size_t j = 0; j < n; ++j) {
        if (j != i) denom *= (z[i] - z[j]);
      }
      Complex step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, Real(abs(step)));
    }
    if (change < tol) break;
  }
  return z;
}

bool near_integer(const Real& x, Integer& out) {
  Real r = round(x);
  if (abs(x - r) > Real("1e-30")) return false;
  std::string digits = r.str(0, std::ios_base::fixed);
  digits = digits.substr(0, digits.find('.'));
  if (digits == "-0") digits = "0";
  out = Integer(digits);
  return true;
}

// Product of (y - r) over the selected roots, rounded to integers when every
// coefficient is numerically integral.
bool integral_factor(const std::vector<Complex>& roots, const std::vector<size_t>& pick, IntPoly& out) {
  std::vector<Complex> c{Complex(1, 0)};
  for (size_t idx : pick) {
    std::vector<Complex> next(c.size() + 1, Complex(0, 0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * roots[idx];
    }
    c = std::move(next);
  }
  out.assign(c.size(), Integer(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (abs(c[i].imag()) > Real("1e-30")) return false;
    if (!near_integer(c[i].real(), out[i])) return false;
  }
  return true;
}

// Advances `pick` (strictly increasing indices into [0, n)) to the next
// combination in lexicographic order.
bool next_combination(std::vector<size_t>& pick, size_t n) {
  size_t k = pick.size();
  for (size_t i = k; i-- > 0;) {
    if (pick[i] < n - k + i) {
      ++pick[i];
      for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Splits q into monic irreducible integer factors.
std::vector<IntPoly> factor_monic_integer(IntPoly q) {
  std::vector<IntPoly> factors;
  if (q.size() <= 2) {
    factors.push_back(q);
    return factors;
  }
  std::vector<Complex> roots = approximate_roots(q);
  std::vector<Complex> remaining;
  // Integer roots first.
  for (const auto& r : roots) {
    Integer k;
    if (abs(r.imag()) < Real("1e-30") && near_integer(r.real(), k)) {
      IntPoly lin{-k, Integer(1)}, quo;
      if (divide_exact(q, lin, quo)) {
        factors.push_back(lin);
        q = std::move(quo);
        continue;
      }
    }
    remaining.push_back(r);
  }
  // Smallest root subsets with integral symmetric functions.
  while (remaining.size() > 1) {
    size_t n = remaining.size();
    bool split = false;
    for (size_t size = 2; size <= n / 2 && !split; ++size) {
      std::vector<size_t> pick(size);
      for (size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        Complex trace(0, 0);
        for (size_t idx : pick) trace += remaining[idx];
        Integer t;
        if (abs(trace.imag()) < Real("1e-30") && near_integer(trace.real(), t)) {
          IntPoly cand, quo;
          if (integral_factor(remaining, pick, cand) && divide_exact(q, cand, quo)) {
            factors.push_back(cand);
            q = std::move(quo);
            std::vector<Complex> rest;
            for (size_t i = 0, k = 0; i < n; ++i) {
              if (k < size && pick[k] == i) {
                ++k;
              } else {
                rest.push_back(remaining[i]);
              }
            }
            remaining = std::move(rest);
            split = true;
            break;
          }
        }
        if (!next_combination(pick, n)) break;
      }
    }
    if (!split) break;
  }
  if (q.size() > 1) factors.push_back(q);
  return factors;
}

}  // namespace

std::vector<Polynomial> factor_squarefree(const Polynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("factor_squarefree: degree must be positive");
  Polynomial m = p.monic();
  if (gcd(m, m.derivative()).degree() > 0) throw std::invalid_argument("factor_squarefree: input is not squarefree");
  Integer scale;
  IntPoly q = to_monic_integer(m, scale);
  std::vector<Polynomial> out;
  for (const auto& f : factor_monic_integer(q)) out.push_back(from_monic_integer(f, scale));
  // Exact recomposition check.
  Polynomial prod = Polynomial::constant(1);
  for (const auto& f : out) prod = prod * f;
  if (!(prod == m)) throw std::logic_error("factor_squarefree: recomposition failed");
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.coefficients().size(); ++i) {
      if (a.coefficient(i) != b.coefficient(i)) return a.coefficient(i) < b.coefficient(i);
    }
    return false;
  });
  return out;
}

}  // namespace nisub
