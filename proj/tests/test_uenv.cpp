#include <doctest.h>

#include <set>

#include "fmb/rlie.hpp"
#include "fmb/uenv.hpp"

using namespace fmb;

TEST_CASE("envelope of a one-generator algebra is a truncated polynomial ring") {
  Field F = Field::prime(2);
  Envelope E = build_envelope(make_nilcyclic(F, 2));
  REQUIRE(E.algebra.alg().dim == 4);
  CHECK(validate_algebra(E.algebra.alg()).empty());
  // x1 generates: its powers sweep the monomials x1, x1^2 = x2, x1^3 = x1*x2
  Vec x = E.embed(unit_vec(F, 2, 0));
  const Algebra& A = E.algebra.alg();
  Vec x2 = A.mul(x, x);
  Vec x3 = A.mul(x2, x);
  Vec x4 = A.mul(x3, x);
  CHECK(is_zero_vec(F, x4));
  CHECK_FALSE(is_zero_vec(F, x3));
  RadicalFiltration R = E.algebra.filtration();
  CHECK(R.nilindex() == 4);
  CHECK(R.dim_power(1) == 3);
  CHECK(R.dim_power(2) == 2);
  CHECK(R.dim_power(3) == 1);
  // the monomial heights match: x1 at height 1, x2 at height 2
  CHECK(E.heights == std::vector<int>{1, 2});
  CHECK(E.omega_nilindex() == 4);
}

TEST_CASE("envelope dimensions are p to the dim") {
  {
    Field F = Field::prime(2);
    CHECK(build_envelope(make_nilcyclic(F, 1)).algebra.dim() == 2);
    CHECK(build_envelope(make_heisenberg_chain(1)).algebra.dim() == 8);
    CHECK(build_envelope(make_heisenberg_chain(2)).algebra.dim() == 64);
    CHECK(build_envelope(make_family(1, 1, 1, 2)).algebra.dim() == 16);
  }
  {
    Field F = Field::prime(3);
    CHECK(build_envelope(make_heisenberg3(F)).algebra.dim() == 27);
    CHECK(build_envelope(make_nilcyclic(F, 2)).algebra.dim() == 9);
  }
}

TEST_CASE("omega powers coincide with the radical filtration") {
  std::vector<Envelope> cases;
  cases.push_back(build_envelope(make_nilcyclic(Field::prime(2), 2)));
  cases.push_back(build_envelope(make_heisenberg_chain(1)));
  cases.push_back(build_envelope(make_heisenberg3(Field::prime(3))));
  cases.push_back(build_envelope(make_alpha_family(Field::rational(2), Field::rational(2).t())));
  for (const Envelope& E : cases) {
    RadicalFiltration R = E.algebra.filtration();
    CHECK(E.omega_nilindex() == R.nilindex());
    for (int n = 0; n <= R.nilindex(); ++n) {
      CHECK(E.omega_power(n) == R.power(n));
    }
  }
}

TEST_CASE("graded dimensions of the Heisenberg envelope over F_3") {
  Envelope E = build_envelope(make_heisenberg3(Field::prime(3)));
  RadicalFiltration R = E.algebra.filtration();
  CHECK(R.nilindex() == 9);
  std::vector<int> omega_dims;
  for (int n = 0; n <= 9; ++n) omega_dims.push_back(R.dim_power(n));
  CHECK(omega_dims == std::vector<int>{27, 26, 24, 20, 16, 11, 7, 3, 1, 0});
  std::vector<int> layer_dims;
  for (int n = 0; n < 9; ++n) layer_dims.push_back(R.dim_power(n) - R.dim_power(n + 1));
  CHECK(layer_dims == std::vector<int>{1, 2, 4, 4, 5, 4, 4, 2, 1});
}

TEST_CASE("graded dimensions of the small Heisenberg chain envelope") {
  Envelope E = build_envelope(make_heisenberg_chain(1));
  RadicalFiltration R = E.algebra.filtration();
  CHECK(R.nilindex() == 5);
  std::vector<int> dims;
  for (int n = 0; n <= 5; ++n) dims.push_back(R.dim_power(n));
  CHECK(dims == std::vector<int>{8, 7, 5, 3, 1, 0});
}

TEST_CASE("the restricted ideal inside omega powers recovers the dimension chain") {
  // embed(D_m) = L-embed intersect omega^m
  std::vector<RestrictedLieAlgebra> algs;
  algs.push_back(make_nilcyclic(Field::prime(2), 3));
  algs.push_back(make_heisenberg_chain(1));
  algs.push_back(make_heisenberg3(Field::prime(3)));
  for (const auto& L : algs) {
    Envelope E = build_envelope(L);
    DimensionChain C = dimension_chain(L);
    Field F = L.field;
    Subspace lie_image(F, E.algebra.alg().dim);
    for (int i = 0; i < L.dim; ++i) lie_image.insert(E.embed(unit_vec(F, L.dim, i)));
    for (int m = 1; m <= C.top() + 1; ++m) {
      Subspace expect(F, E.algebra.alg().dim);
      for (const Vec& row : C.at(m).rows()) expect.insert(E.embed(row));
      Subspace got = subspace_intersect(lie_image, E.omega_power(m));
      CHECK(expect == got);
    }
  }
}

TEST_CASE("p-power evaluation of general Lie elements") {
  {
    Field F = Field::prime(3);
    Envelope E = build_envelope(make_heisenberg3(F));
    // (x+y)^[3] = 0: the Jacobson correction terms vanish in class 2, p = 3
    Vec xy = vec_add(F, unit_vec(F, 3, 0), unit_vec(F, 3, 1));
    CHECK(E.pmap_eval(xy) == zero_vec(F, 3));
    CHECK(E.pmap_eval(unit_vec(F, 3, 0)) == zero_vec(F, 3));
  }
  {
    // [x,y] = z, x^[2] = z, y^[2] = 0: (x+y)^[2] = x^2 + y^2 + [y,x]... in
    // characteristic 2 the cross term is xy + yx = [x,y], so the power is
    // z + 0 + z = 0
    Field F = Field::prime(2);
    RestrictedLieAlgebra L = make_heisenberg3(F);
    L.pmap[0] = unit_vec(F, 3, 2);
    REQUIRE(validate_restricted(L).empty());
    Envelope E = build_envelope(L);
    Vec s = vec_add(F, unit_vec(F, 3, 0), unit_vec(F, 3, 1));
    CHECK(E.pmap_eval(s) == zero_vec(F, 3));
    CHECK(E.pmap_eval(unit_vec(F, 3, 0)) == unit_vec(F, 3, 2));
  }
  {
    Field F = Field::prime(2);
    Envelope E = build_envelope(make_nilcyclic(F, 2));
    CHECK(E.pmap_eval(unit_vec(F, 2, 0)) == unit_vec(F, 2, 1));
  }
}

TEST_CASE("deformed abelian family envelope over rational functions") {
  Field F = Field::rational(2);
  Scalar t = F.t();
  Envelope E = build_envelope(make_alpha_family(F, t));
  REQUIRE(E.algebra.alg().dim == 8);
  CHECK(validate_algebra(E.algebra.alg()).empty());
  CHECK(E.heights == std::vector<int>{1, 1, 2});
  // x * x = t z as monomials
  Vec x = E.embed(unit_vec(F, 3, 0));
  Vec z = E.embed(unit_vec(F, 3, 2));
  CHECK(E.algebra.alg().mul(x, x) == vec_scale(F, t, z));
  RadicalFiltration R = E.algebra.filtration();
  std::vector<int> dims;
  for (int n = 0; n <= R.nilindex(); ++n) dims.push_back(R.dim_power(n));
  CHECK(dims == std::vector<int>{8, 7, 5, 3, 1, 0});
}

TEST_CASE("word image basis of the small Heisenberg chain envelope") {
  Field F = Field::prime(2);
  Envelope E = build_envelope(make_heisenberg_chain(1));
  std::vector<Vec> gens = {E.embed(unit_vec(F, 3, 0)), E.embed(unit_vec(F, 3, 1))};
  WordImageBasis W = word_image_basis(E, gens);
  REQUIRE(W.members.size() == 8);
  CHECK(W.spans);
  // expected word list in breadth-first order: empty, x, y, xy, yx, xyx, yxy, xyxy
  std::vector<std::vector<int>> expect_words = {
      {}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 0, 1}};
  CHECK(W.words == expect_words);
  // the unit comes first
  CHECK(W.members[0] == E.algebra.alg().unit);
  // yx = xy + z as monomial vectors
  const Algebra& A = E.algebra.alg();
  CHECK(W.members[4] == A.mul(gens[1], gens[0]));
  CHECK(W.members[4] != W.members[3]);
  // exactly one collision group: xyxy = yxyx, the longest word pair
  REQUIRE(W.collisions.size() == 1);
  CHECK(W.collisions[0].member == 7);
  std::set<std::vector<int>> cw(W.collisions[0].words.begin(), W.collisions[0].words.end());
  CHECK(cw == std::set<std::vector<int>>{{0, 1, 0, 1}, {1, 0, 1, 0}});
}

TEST_CASE("word image basis detects non-spanning generator sets") {
  Field F = Field::prime(2);
  Envelope E = build_envelope(make_heisenberg_chain(1));
  std::vector<Vec> gens = {E.embed(unit_vec(F, 3, 0))};  // x alone: x^2 = 0
  WordImageBasis W = word_image_basis(E, gens);
  CHECK_FALSE(W.spans);
  CHECK(W.members.size() == 2);  // unit and x
}

namespace {
bool members_form_basis(const FamilyBasis& B) {
  const Field& F = B.env.algebra.field();
  int n = B.env.algebra.dim();
  if (static_cast<int>(B.members.size()) != n) return false;
  Subspace S(F, n);
  for (const Vec& v : B.members) S.insert(v);
  return S.dim() == n;
}
}  // namespace

TEST_CASE("block family basis enumerations") {
  {
    // single nilcyclic block of length 2: powers of x1
    FamilyBasis B = family_basis(1, 0, 2, 2);
    REQUIRE(B.members.size() == 4);
    CHECK(members_form_basis(B));
    CHECK(B.word_names[0] == "1");
  }
  {
    // one nilcyclic and one Heisenberg block: 4 * 8 basis products
    FamilyBasis B = family_basis(1, 1, 1, 2);
    REQUIRE(B.members.size() == 16);
    CHECK(members_form_basis(B));
  }
  {
    FamilyBasis B = family_basis(0, 1, 2, 2);
    REQUIRE(B.members.size() == 64);
    CHECK(members_form_basis(B));
  }
}

TEST_CASE("family construction guards") {
  CHECK_THROWS(make_family(0, 0, 1, 2));
  CHECK_THROWS(make_family(1, 0, 0, 2));
  CHECK(make_family(2, 0, 1, 2).dim == 2);
  CHECK(make_family(1, 2, 3, 2).dim == 3 + 2 * 9);
}
