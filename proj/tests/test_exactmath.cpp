#include <doctest.h>

#include <algorithm>
#include <random>

#include "fmb/field.hpp"
#include "fmb/linalg.hpp"

using namespace fmb;

TEST_CASE("prime field arithmetic") {
  Field F3 = Field::prime(3);
  CHECK(F3.mul(F3.from_int(2), F3.from_int(2)) == F3.one());
  CHECK(F3.add(F3.from_int(2), F3.from_int(2)) == F3.from_int(1));
  CHECK(F3.inv(F3.from_int(2)) == F3.from_int(2));
  Field F2 = Field::prime(2);
  CHECK(F2.add(F2.one(), F2.one()) == F2.zero());
  CHECK(F2.neg(F2.one()) == F2.one());
  Field F251 = Field::prime(251);
  for (int a = 1; a < 251; ++a)
    CHECK(F251.mul(F251.from_int(a), F251.inv(F251.from_int(a))) == F251.one());
  CHECK_THROWS(Field::prime(4));
  CHECK_THROWS(Field::prime(252));
  CHECK_THROWS(F3.inv(F3.zero()));
}

TEST_CASE("rational function arithmetic") {
  Field F = Field::rational(2);
  Scalar t = F.t();
  Scalar tp1 = F.add(t, F.one());
  // t/(t+1) * (t+1)/t = 1
  Scalar a = F.div(t, tp1);
  Scalar b = F.div(tp1, t);
  CHECK(F.mul(a, b) == F.one());
  // (t^2 + t) + t = t^2  (char 2)
  Scalar t2pt = F.add(F.mul(t, t), t);
  CHECK(F.add(t2pt, t) == F.mul(t, t));
  // canonical form: denominators monic, fraction reduced
  Scalar c = F.from_fraction({0, 1, 1}, {0, 1});  // (t + t^2)/t = 1 + t
  CHECK(c == tp1);
  CHECK(F.to_string(c) == "t+1");
  CHECK_THROWS(F.inv(F.zero()));
  CHECK_THROWS(F.from_fraction({1}, {}));
}

TEST_CASE("pth root detection") {
  Field F = Field::rational(2);
  Scalar t = F.t();
  CHECK_FALSE(F.pth_root(t).has_value());
  CHECK(F.pth_root(F.mul(t, t)) == t);
  // (t^2+1)/t^4 = ((t+1)/t^2)^2 in char 2
  Scalar v = F.from_fraction({1, 0, 1}, {0, 0, 0, 0, 1});
  Scalar w = F.from_fraction({1, 1}, {0, 0, 1});
  CHECK(F.pth_root(v) == w);
  CHECK_FALSE(F.pth_root(F.add(F.mul(t, t), t)).has_value());

  Field Fp = Field::prime(5);
  // Frobenius is the identity on F_p
  for (int a = 0; a < 5; ++a) {
    auto r = Fp.pth_root(Fp.from_int(a));
    REQUIRE(r.has_value());
    CHECK(Fp.pow(*r, 5) == Fp.from_int(a));
  }
}

TEST_CASE("pth root round trips on random values") {
  std::mt19937_64 rng(20240817);
  for (Field F : {Field::rational(2), Field::rational(3), Field::prime(7)}) {
    for (int iter = 0; iter < 200; ++iter) {
      Scalar b;
      if (F.kind() == FieldKind::RatFunc) {
        auto rnd_poly = [&](int maxdeg) {
          Poly q(rng() % (maxdeg + 1) + 1);
          for (auto& c : q) c = rng() % F.p();
          poly_trim(q);
          return q;
        };
        Poly num = rnd_poly(3), den = rnd_poly(3);
        if (den.empty()) den = {1};
        b = F.from_fraction(num, den);
      } else {
        b = F.from_int(rng() % F.p());
      }
      Scalar a = F.pow(b, F.p());
      auto r = F.pth_root(a);
      REQUIRE(r.has_value());
      CHECK(F.pow(*r, F.p()) == a);
    }
  }
}

TEST_CASE("rref canonical forms") {
  Field F2 = Field::prime(2);
  // {(1,1,0),(0,1,1)} stays two-dimensional in echelon form
  Subspace s(F2, 3, {{F2.one(), F2.one(), F2.zero()}, {F2.zero(), F2.one(), F2.one()}});
  CHECK(s.dim() == 2);
  CHECK(s.pivots() == std::vector<int>{0, 1});
  // reduced: row 0 has zero in the second pivot column
  CHECK(s.rows()[0] == Vec{F2.one(), F2.zero(), F2.one()});

  Field Q = Field::rational(2);
  Subspace r(Q, 2, {{Q.t(), Q.one()}});
  CHECK(r.dim() == 1);
  CHECK(r.rows()[0][0] == Q.one());
  CHECK(r.rows()[0][1] == Q.div(Q.one(), Q.t()));
}

TEST_CASE("rref canonical under row shuffles and scalings") {
  std::mt19937_64 rng(991);
  for (Field F : {Field::prime(3), Field::rational(2)}) {
    auto rnd_scalar = [&]() {
      if (F.kind() == FieldKind::Prime) return F.from_int(rng() % F.p());
      Poly num{static_cast<uint32_t>(rng() % F.p()), static_cast<uint32_t>(rng() % F.p())};
      poly_trim(num);
      return F.from_fraction(num, {1});
    };
    for (int iter = 0; iter < 40; ++iter) {
      int n = 5;
      std::vector<Vec> rows;
      for (int i = 0; i < 3; ++i) {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[j] = rnd_scalar();
        rows.push_back(v);
      }
      Subspace a(F, n, rows);
      std::shuffle(rows.begin(), rows.end(), rng);
      // rescale rows by nonzero scalars; also mix one row into another
      for (auto& v : rows) {
        Scalar c = rnd_scalar();
        if (!F.is_zero(c)) v = vec_scale(F, c, v);
      }
      rows.push_back(vec_add(F, rows[0], rows[1]));
      Subspace b(F, n, rows);
      CHECK(a == b);
    }
  }
}

TEST_CASE("subspace sum and intersection dimensions") {
  std::mt19937_64 rng(4242);
  Field F = Field::prime(3);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 6;
    auto rnd_space = [&](int k) {
      std::vector<Vec> rows;
      for (int i = 0; i < k; ++i) {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[j] = F.from_int(rng() % 3);
        rows.push_back(v);
      }
      return Subspace(F, n, rows);
    };
    Subspace u = rnd_space(rng() % 5), v = rnd_space(rng() % 5);
    Subspace s = subspace_sum(u, v), i = subspace_intersect(u, v);
    CHECK(u.dim() + v.dim() == s.dim() + i.dim());
    CHECK(s.contains(u));
    CHECK(s.contains(v));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
  }
}

TEST_CASE("quotient representatives") {
  Field F = Field::prime(2);
  Subspace outer(F, 3,
                 {unit_vec(F, 3, 0), unit_vec(F, 3, 1), unit_vec(F, 3, 2)});
  Subspace inner(F, 3, {unit_vec(F, 3, 2)});
  std::vector<Vec> pool = {unit_vec(F, 3, 0), unit_vec(F, 3, 1), unit_vec(F, 3, 2)};
  auto reps = quotient_reps(outer, inner, &pool);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == unit_vec(F, 3, 0));
  CHECK(reps[1] == unit_vec(F, 3, 1));
  CHECK_THROWS(quotient_reps(inner, outer));
}

TEST_CASE("coordinate solver") {
  Field F = Field::prime(5);
  std::vector<Vec> basis = {{F.from_int(1), F.from_int(2), F.zero()},
                            {F.zero(), F.from_int(1), F.from_int(3)}};
  CoordinateSolver cs(F, 3, basis);
  CHECK(cs.independent());
  Vec v = vec_add(F, vec_scale(F, F.from_int(2), basis[0]),
                  vec_scale(F, F.from_int(4), basis[1]));
  auto c = cs.coords(v);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == F.from_int(2));
  CHECK((*c)[1] == F.from_int(4));
  CHECK_FALSE(cs.coords(unit_vec(F, 3, 0)).has_value());
}

TEST_CASE("null space") {
  Field F = Field::prime(2);
  // x0 + x1 = 0, x2 = 0 over F_2 -> span{(1,1,0)}
  std::vector<Vec> rows = {{F.one(), F.one(), F.zero()}, {F.zero(), F.zero(), F.one()}};
  Subspace ns = null_space(F, 3, rows);
  REQUIRE(ns.dim() == 1);
  CHECK(ns.rows()[0] == Vec{F.one(), F.one(), F.zero()});
}
