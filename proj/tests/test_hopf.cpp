#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "nisub/center.hpp"
#include "nisub/error.hpp"
#include "nisub/hopf.hpp"
#include "nisub/hopf_io.hpp"

#include <sstream>

using namespace nisub;

namespace {

HopfPtr algebra_of(const GroupPtr& g) { return std::make_shared<const HopfAlgebra>(group_algebra(*g)); }

Vector u(const Group& g, Element e) { return unit_vector(g.order(), e); }

Element find(const GroupPtr& g, const std::string& word) { return *g->find(parse_permutation(word, g->degree())); }

Vector indicator(const Group& g, const ElementSet& s) {
  Vector v = zero_vector(g.order());
  for (Element e : s.elements()) v[e] = 1;
  return v;
}

Matrix left_regular(const HopfAlgebra& h, const Vector& x) {
  Matrix m(h.dim(), h.dim());
  for (size_t j = 0; j < h.dim(); ++j) {
    Vector col = h.multiply(x, h.basis_vector(j));
    for (size_t i = 0; i < h.dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace

TEST_CASE("group algebra axioms and shape") {
  GroupPtr s3 = corpus::symmetric(3);
  HopfAlgebra cs3 = group_algebra(*s3);
  CHECK(verify_hopf_axioms(cs3).all_passed());
  CHECK(cs3.dim() == 6);
  CHECK_FALSE(cs3.is_commutative());
  CHECK(cs3.is_cocommutative());

  GroupPtr c2 = corpus::named("C2");
  HopfAlgebra cc2 = group_algebra(*c2);
  CHECK(cc2.dim() == 2);
  CHECK(cc2.antipode_matrix() == Matrix::identity(2));  // every element is its own inverse

  HopfAlgebra one = group_algebra(*corpus::trivial_group());
  CHECK(one.dim() == 1);
  CHECK(verify_hopf_axioms(one).all_passed());
  CHECK(one.antipode_matrix() == Matrix::identity(1));
  CHECK(one.star_matrix() == Matrix::identity(1));

  for (Element g = 0; g < s3->order(); ++g) {
    CHECK(cs3.antipode(u(*s3, g)) == u(*s3, s3->inverse(g)));
    Tensor2 d = cs3.comultiply(u(*s3, g));
    CHECK(d.size() == 1);
    CHECK(d.begin()->first == std::make_pair(g, g));
  }
}

TEST_CASE("corrupted structure constants are caught") {
  HopfAlgebra cs3 = group_algebra(*corpus::symmetric(3));
  HopfAlgebra::Data d = cs3.data();
  d.mult[1 * 6 + 2] = {{3, Rational(1)}, {4, Rational(1)}};
  AxiomReport r = verify_hopf_axioms(HopfAlgebra(d));
  CHECK_FALSE(r.all_passed());
  bool assoc_failed = false;
  for (const auto& res : r.results) {
    if (res.name == "associativity" && !res.passed) {
      assoc_failed = true;
      CHECK_FALSE(res.witness.empty());
    }
  }
  CHECK(assoc_failed);
  REQUIRE(r.failure() != nullptr);

  HopfAlgebra::Data bad = cs3.data();
  bad.mult.pop_back();
  CHECK_THROWS_AS(HopfAlgebra{bad}, PreconditionError);
}

TEST_CASE("duals") {
  GroupPtr s3 = corpus::symmetric(3);
  HopfPtr cs3 = algebra_of(s3);
  DualResult dr = dual_hopf(cs3);
  const HopfAlgebra& fs3 = *dr.dual;
  CHECK(verify_hopf_axioms(fs3).all_passed());
  CHECK(fs3.is_commutative());
  CHECK_FALSE(fs3.is_cocommutative());
  for (size_t g = 0; g < 6; ++g) {
    for (size_t h = 0; h < 6; ++h) {
      Vector want = g == h ? fs3.basis_vector(g) : zero_vector(6);
      CHECK(fs3.multiply(fs3.basis_vector(g), fs3.basis_vector(h)) == want);
    }
  }
  CHECK(dr.pairing.form == Matrix::identity(6));
  CHECK(dr.pairing(fs3.basis_vector(2), cs3->basis_vector(2)) == 1);

  DualResult ddr = dual_hopf(dr.dual);
  CHECK(is_hopf_isomorphism(*cs3, *ddr.dual, Matrix::identity(6)));

  HopfPtr cc2 = algebra_of(corpus::named("C2"));
  HopfPtr fc2 = dual_hopf(cc2).dual;
  Matrix phi(2, 2);
  phi(0, 0) = 1;
  phi(1, 0) = 1;
  phi(0, 1) = 1;
  phi(1, 1) = -1;
  CHECK(is_hopf_isomorphism(*cc2, *fc2, phi));
  CHECK_FALSE(is_hopf_isomorphism(*cc2, *fc2, Matrix::identity(2)));
}

TEST_CASE("subHopf predicate") {
  GroupPtr s4 = corpus::symmetric(4);
  HopfAlgebra cs4 = group_algebra(*s4);
  for (const auto& h : enumerate_subgroups(s4)) CHECK(is_subhopf(group_subspace(*s4, h.members()), cs4));

  GroupPtr s3 = corpus::symmetric(3);
  HopfAlgebra cs3 = group_algebra(*s3);
  Vector e = u(*s3, s3->identity());
  Vector v = u(*s3, find(s3, "(1 2)")) + u(*s3, find(s3, "(1 3)"));
  CHECK_FALSE(is_subhopf(Subspace::span(6, {e, v}), cs3));
  CHECK(is_subhopf(Subspace::whole(6), cs3));
}

TEST_CASE("annihilators, support projections and reduced duals") {
  GroupPtr s4 = corpus::symmetric(4);
  HopfPtr cs4 = algebra_of(s4);
  DualPairing pairing = dual_hopf(cs4).pairing;
  // pairing.left = C^G, pairing.right = C G
  for (const auto& h : enumerate_subgroups(s4)) {
    Subspace k = group_subspace(*s4, h.members());
    Subspace perp = annihilator(k, pairing);
    CHECK(perp.dim() == 24 - h.size());
    for (const auto& f : perp.basis()) {
      for (Element x : h.members().elements()) CHECK(f[x] == 0);
    }
    Vector ek = support_projection(k, pairing);
    CHECK(ek == indicator(*s4, h.members()));
    ReducedDual rd = reduced_dual(k, pairing);
    CHECK(rd.algebra->dim() == h.size());
    CHECK(verify_hopf_axioms(*rd.algebra).all_passed());
    CHECK(rd.algebra->is_commutative());
  }
  Subspace whole = Subspace::whole(24);
  CHECK(annihilator(whole, pairing).dim() == 0);
  CHECK(support_projection(whole, pairing) == Vector(24, Rational(1)));
  CHECK(reduced_dual(whole, pairing).algebra->dim() == 24);

  Subspace unit = Subspace::span(24, {cs4->unit()});
  CHECK(annihilator(unit, pairing).dim() == 23);
  Vector e1 = support_projection(unit, pairing);
  const HopfAlgebra& dual = *pairing.left;
  CHECK(dual.multiply(e1, e1) == e1);
  CHECK(is_central(e1, dual));
  CHECK(dual.counit(e1) == 1);
  CHECK(reduced_dual(unit, pairing).algebra->dim() == 1);
}

TEST_CASE("restrict_to_subhopf and reduced dual pairing") {
  GroupPtr a4 = corpus::named("A4");
  HopfPtr ca4 = algebra_of(a4);
  DualPairing pairing = dual_hopf(ca4).pairing;
  for (const auto& h : enumerate_subgroups(a4)) {
    Subspace k = group_subspace(*a4, h.members());
    HopfAlgebra kh = restrict_to_subhopf(k, *ca4);
    CHECK(kh.dim() == h.size());
    CHECK(verify_hopf_axioms(kh).all_passed());
    ReducedDual rd = reduced_dual(k, pairing);
    CHECK(rank(rd.pairing.form) == h.size());
  }
}

TEST_CASE("adjoint actions") {
  GroupPtr s3 = corpus::symmetric(3);
  HopfAlgebra cs3 = group_algebra(*s3);
  for (Element g = 0; g < 6; ++g) {
    for (Element k = 0; k < 6; ++k) {
      AdjointPair ad = adjoint_actions(u(*s3, g), u(*s3, k), cs3);
      CHECK(ad.left == u(*s3, s3->mul(s3->mul(g, k), s3->inverse(g))));
      CHECK(ad.right == u(*s3, s3->mul(s3->mul(s3->inverse(g), k), g)));
      CHECK(adjoint_actions(cs3.unit(), u(*s3, k), cs3).left == u(*s3, k));
    }
  }
  HopfPtr fs3 = dual_hopf(algebra_of(s3)).dual;
  for (size_t g = 0; g < 6; ++g) {
    for (size_t h = 0; h < 6; ++h) {
      Vector want = fs3->counit(fs3->basis_vector(g)) * fs3->basis_vector(h);
      CHECK(adjoint_actions(fs3->basis_vector(g), fs3->basis_vector(h), *fs3).left == want);
    }
  }
}

TEST_CASE("normal subHopf algebras") {
  GroupPtr s3 = corpus::symmetric(3);
  HopfAlgebra cs3 = group_algebra(*s3);
  NormalityCriteria a3 = is_normal_subhopf(group_subspace(*s3, corpus::sub(s3, "(1 2 3)").members()), cs3);
  CHECK(a3.ad_invariant);
  CHECK(a3.augmentation_criterion);
  NormalityCriteria t = is_normal_subhopf(group_subspace(*s3, corpus::sub(s3, "(1 2)").members()), cs3);
  CHECK_FALSE(t.ad_invariant);
  CHECK_FALSE(t.augmentation_criterion);
  NormalityCriteria w = is_normal_subhopf(Subspace::whole(6), cs3);
  CHECK(w.ad_invariant);
  CHECK(w.augmentation_criterion);
  Vector v = u(*s3, 0) + u(*s3, 1);
  CHECK_THROWS_AS(is_normal_subhopf(Subspace::span(6, {v}), cs3), PreconditionError);

  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    GroupPtr g = corpus::named(name);
    HopfAlgebra cg = group_algebra(*g);
    for (const auto& h : enumerate_subgroups(g)) {
      bool normal = is_normal_subgroup(h).holds;
      CHECK(is_normal_subhopf(group_subspace(*g, h.members()), cg).ad_invariant == normal);
      CHECK(is_central(jones_projection_of_subgroup(h), cg) == normal);
    }
  }
}

TEST_CASE("subHopf enumeration") {
  GroupPtr s3 = corpus::symmetric(3);
  HopfPtr cs3 = algebra_of(s3);
  auto subs = enumerate_subhopf(cs3);
  CHECK(subs.size() == 6);
  std::set<std::vector<Vector>> want;
  for (const auto& h : enumerate_subgroups(s3)) want.insert(group_subspace(*s3, h.members()).basis());
  for (const auto& k : subs) CHECK(want.count(k.basis()) == 1);
  CHECK(enumerate_subhopf(dual_hopf(cs3).dual).size() == 3);
  CHECK(enumerate_subhopf(algebra_of(corpus::trivial_group())).size() == 1);

  SubhopfOptions checked;
  checked.brute_force_blocks = 16;
  CHECK(enumerate_subhopf(cs3, checked).size() == 6);
  for (uint64_t seed : {2u, 3u, 99u}) CHECK(enumerate_subhopf(cs3, {seed, 0}) == subs);
}

TEST_CASE("subHopf counts match subgroup oracles over the corpus") {
  for (const auto& e : corpus::groups()) {
    CAPTURE(e.name);
    GroupPtr g = corpus::make(e);
    HopfPtr cg = algebra_of(g);
    HopfPtr fg = dual_hopf(cg).dual;
    auto subs = enumerate_subhopf(cg);
    auto dual_subs = enumerate_subhopf(fg);
    CHECK(subs.size() == e.subgroups);
    CHECK(dual_subs.size() == e.normal);
    if (e.order <= 8) {
      CHECK(enumerate_subhopf_exhaustive(cg) == subs);
      CHECK(enumerate_subhopf_exhaustive(fg) == dual_subs);
    }
    DualPairing p_cg = dual_hopf(fg).pairing;  // left = C G (double dual), right = C^G
    DualPairing p_fg = dual_hopf(cg).pairing;  // left = C^G, right = C G
    for (const auto& k : subs) {
      is_normal_subhopf(k, *cg);  // throws if the two criteria disagree
      CHECK(reduced_dual(k, p_fg).algebra->dim() == k.dim());
    }
    for (const auto& k : dual_subs) {
      is_normal_subhopf(k, *fg);
      CHECK(reduced_dual(k, p_cg).algebra->dim() == k.dim());
    }
  }
}

TEST_CASE("bicrossed products") {
  GroupPtr s3 = corpus::symmetric(3);
  MatchedPair mp = matched_pair_from_factorization(corpus::sub(s3, "(1 2 3)"), corpus::sub(s3, "(1 2)"));
  HopfAlgebra h = bicrossed_product(mp);
  CHECK(h.dim() == 6);
  CHECK(verify_hopf_axioms(h).all_passed());
  auto hp = std::make_shared<const HopfAlgebra>(h);
  CHECK(verify_hopf_axioms(*dual_hopf(hp).dual).all_passed());

  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    GroupPtr g = corpus::named(name);
    HopfPtr cg = algebra_of(g);
    MatchedPair left = matched_pair_from_factorization(Subgroup::whole(g), Subgroup::trivial(g));
    CHECK(is_hopf_isomorphism(bicrossed_product(left), *dual_hopf(cg).dual, Matrix::identity(g->order())));
    MatchedPair right = matched_pair_from_factorization(Subgroup::trivial(g), Subgroup::whole(g));
    CHECK(is_hopf_isomorphism(bicrossed_product(right), *cg, Matrix::identity(g->order())));
  }

  size_t tested = 0;
  for (const char* name : {"S3", "D4", "A4", "D6", "S4"}) {
    GroupPtr g = corpus::named(name);
    auto subs = enumerate_subgroups(g);
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        if (a.is_trivial() || b.is_trivial() || !exact_factorization_check(*g, a, b)) continue;
        auto bp = std::make_shared<const HopfAlgebra>(bicrossed_product(matched_pair_from_factorization(a, b)));
        CHECK(bp->dim() == a.size() * b.size());
        CHECK(verify_hopf_axioms(*bp).all_passed());
        if (g->order() <= 12) CHECK(verify_hopf_axioms(*dual_hopf(bp).dual).all_passed());
        ++tested;
      }
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("Jones projections and centrality") {
  GroupPtr s3 = corpus::symmetric(3);
  HopfAlgebra cs3 = group_algebra(*s3);
  CHECK(jones_projection_of_subgroup(Subgroup::trivial(s3)) == cs3.unit());
  Vector eg = jones_projection_of_subgroup(Subgroup::whole(s3));
  for (Element g = 0; g < 6; ++g) CHECK(cs3.multiply(u(*s3, g), eg) == eg);
  Vector ea3 = jones_projection_of_subgroup(corpus::sub(s3, "(1 2 3)"));
  CHECK(rank(left_regular(cs3, ea3)) == 2);
  CHECK(is_central(ea3, cs3));
  CHECK_FALSE(is_central(jones_projection_of_subgroup(corpus::sub(s3, "(1 2)")), cs3));
  CHECK(is_central(cs3.unit(), cs3));
}

TEST_CASE("Fourier transform") {
  GroupPtr s4 = corpus::symmetric(4);
  CHECK(fourier_transform(*s4, u(*s4, s4->identity())) == u(*s4, s4->identity()));
  for (const auto& h : enumerate_subgroups(s4)) {
    Vector f = fourier_transform(*s4, jones_projection_of_subgroup(h));
    CHECK(f == Rational(1, h.size()) * indicator(*s4, h.members()));
  }
  Element g = find(s4, "(1 2 3)");
  Vector x = u(*s4, g) + u(*s4, s4->inverse(g));
  CHECK(fourier_transform(*s4, x) == u(*s4, s4->inverse(g)) + u(*s4, g));
  Vector y = zero_vector(24);
  for (size_t i = 0; i < 24; ++i) y[i] = Rational(static_cast<long>(i * i) - 7, static_cast<long>(i + 1));
  Vector fy = fourier_transform(*s4, y);
  CHECK(fourier_transform(*s4, fy) == y);
  for (Element e = 0; e < 24; ++e) CHECK(fy[e] == y[s4->inverse(e)]);
}

TEST_CASE("Bisch projection test") {
  GroupPtr s3 = corpus::symmetric(3);
  BischResult r = bisch_projection_test(*s3, jones_projection_of_subgroup(corpus::sub(s3, "(1 2)")));
  CHECK(r.passed());
  REQUIRE(r.lambda);
  CHECK(*r.lambda == Rational(1, 2));
  CHECK(bisch_projection_test(*s3, group_algebra(*s3).unit()).passed());

  GroupPtr v4 = corpus::named("V4");
  Vector p = zero_vector(4);
  Element e = v4->identity();
  Element t = find(v4, "(1 2)(3 4)");
  // 1 - e_chi for the character with chi(t) = 1 and -1 elsewhere
  for (Element g = 0; g < 4; ++g) p[g] = g == e ? Rational(3, 4) : (g == t ? Rational(-1, 4) : Rational(1, 4));
  HopfAlgebra cv4 = group_algebra(*v4);
  REQUIRE(cv4.multiply(p, p) == p);
  BischResult bad = bisch_projection_test(*v4, p);
  CHECK(bad.absorbs_e_n);
  CHECK_FALSE(bad.two_valued);
  CHECK_FALSE(bad.passed());

  Vector q = zero_vector(4);
  q[t] = 1;
  CHECK_THROWS_AS(bisch_projection_test(*v4, q), PreconditionError);
}

TEST_CASE("center splitting") {
  HopfAlgebra cs3 = group_algebra(*corpus::symmetric(3));
  CHECK(algebra_center(cs3).dim() == 3);
  CentralBlocks b = split_center(cs3, 1);
  CHECK(b.idempotents.size() == 3);
  Vector sum = zero_vector(6);
  for (size_t i = 0; i < b.idempotents.size(); ++i) {
    CHECK(cs3.multiply(b.idempotents[i], b.idempotents[i]) == b.idempotents[i]);
    for (size_t j = 0; j < i; ++j) CHECK(is_zero(cs3.multiply(b.idempotents[i], b.idempotents[j])));
    sum = sum + b.idempotents[i];
  }
  CHECK(sum == cs3.unit());
  CHECK(split_center(cs3, 77).idempotents == b.idempotents);

  HopfAlgebra cc3 = group_algebra(*corpus::named("C3"));
  CentralBlocks c = split_center(cc3, 5);
  CHECK(c.idempotents.size() == 2);
  std::vector<size_t> degrees = c.degrees;
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<size_t>{1, 2});

  GroupPtr c4 = corpus::named("C4");
  HopfAlgebra cc4 = group_algebra(*c4);
  Element gen = find(c4, "(1 2 3 4)");
  Polynomial m = minimal_polynomial(cc4, u(*c4, gen));
  CHECK(m == Polynomial({Rational(-1), 0, 0, 0, 1}));
  CHECK(is_zero(evaluate_in(cc4, m, u(*c4, gen))));
}

TEST_CASE("polynomial factoring over Q") {
  // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
  auto f = factor_squarefree(Polynomial({Rational(-1), 0, 0, 0, 1}));
  REQUIRE(f.size() == 3);
  CHECK(f[2] == Polynomial({Rational(1), 0, 1}));
  // x^6 - 1 gives cyclotomic factors of degrees 1, 1, 2, 2
  auto g = factor_squarefree(Polynomial({Rational(-1), 0, 0, 0, 0, 0, 1}));
  CHECK(g.size() == 4);
  CHECK_THROWS(factor_squarefree(Polynomial({Rational(1), 2, 1})));
  ExtendedGcd e = extended_gcd(Polynomial({Rational(-1), 0, 1}), Polynomial({Rational(1), 1}));
  CHECK(e.g == Polynomial({Rational(1), 1}));
}

TEST_CASE("Hopf text format round-trips") {
  GroupPtr s3 = corpus::symmetric(3);
  HopfPtr cs3 = algebra_of(s3);
  MatchedPair mp = matched_pair_from_factorization(corpus::sub(s3, "(1 2 3)"), corpus::sub(s3, "(1 2)"));
  for (const HopfAlgebra& h : {*cs3, *dual_hopf(cs3).dual, bicrossed_product(mp)}) {
    std::stringstream ss;
    write_hopf(ss, h);
    HopfAlgebra back = read_hopf(ss);
    CHECK(back.dim() == h.dim());
    CHECK(back.labels() == h.labels());
    CHECK(is_hopf_isomorphism(h, back, Matrix::identity(h.dim())));
  }
  std::istringstream bad("nisub-hopf 1\ndim 2\nmult 0 0 5 1\nend\n");
  try {
    read_hopf(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream version("nisub-hopf 2\n");
  CHECK_THROWS_AS(read_hopf(version), ParseError);
}
