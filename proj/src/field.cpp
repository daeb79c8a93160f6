#include "fmb/field.hpp"

#include <algorithm>
#include <sstream>

namespace fmb {

uint32_t fp_pow(uint32_t p, uint32_t a, uint64_t e) {
  uint32_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(p, r, a);
    a = fp_mul(p, a, a);
    e >>= 1;
  }
  return r;
}

uint32_t fp_inv(uint32_t p, uint32_t a) {
  if (a % p == 0) throw std::domain_error("division by zero in F_p");
  // p is prime, so Fermat works and avoids signed bookkeeping
  return fp_pow(p, a, p - 2);
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_add(uint32_t p, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = fp_add(p, x, y);
  }
  poly_trim(r);
  return r;
}

Poly poly_sub(uint32_t p, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = fp_sub(p, x, y);
  }
  poly_trim(r);
  return r;
}

Poly poly_mul(uint32_t p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = fp_add(p, r[i + j], fp_mul(p, a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

Poly poly_scale(uint32_t p, uint32_t c, const Poly& a) {
  c %= p;
  if (!c) return {};
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(p, c, a[i]);
  poly_trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(uint32_t p, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a, quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
  uint32_t lead_inv = fp_inv(p, b.back());
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    uint32_t c = fp_mul(p, rem.back(), lead_inv);
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = fp_sub(p, rem[shift + i], fp_mul(p, c, b[i]));
    poly_trim(rem);
    if (rem.empty()) break;
  }
  poly_trim(quot);
  return {quot, rem};
}

Poly poly_gcd(uint32_t p, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_divmod(p, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = poly_scale(p, fp_inv(p, a.back()), a);
  return a;
}

Field Field::prime(uint32_t p) {
  if (p < 2 || p > 251) throw std::invalid_argument("characteristic out of range");
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("characteristic must be prime");
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  return f;
}

Field Field::rational(uint32_t p) {
  Field f = prime(p);
  f.kind_ = FieldKind::RatFunc;
  return f;
}

namespace {
const std::shared_ptr<const RatData>& rat_zero() {
  static auto z = std::make_shared<const RatData>(RatData{{}, {1}});
  return z;
}
const std::shared_ptr<const RatData>& rat_one() {
  static auto o = std::make_shared<const RatData>(RatData{{1}, {1}});
  return o;
}
}  // namespace

Scalar Field::zero() const {
  return kind_ == FieldKind::Prime ? Scalar::residue(0) : Scalar::rational(rat_zero());
}

Scalar Field::one() const {
  return kind_ == FieldKind::Prime ? Scalar::residue(1 % p_) : Scalar::rational(rat_one());
}

Scalar Field::from_int(int64_t n) const {
  int64_t m = n % static_cast<int64_t>(p_);
  if (m < 0) m += p_;
  uint32_t r = static_cast<uint32_t>(m);
  if (kind_ == FieldKind::Prime) return Scalar::residue(r);
  return r ? Scalar::rational(std::make_shared<const RatData>(RatData{{r}, {1}}))
           : Scalar::rational(rat_zero());
}

Scalar Field::from_fraction(Poly num, Poly den) const {
  if (kind_ != FieldKind::RatFunc)
    throw std::invalid_argument("fractions require a rational-function field");
  poly_trim(num);
  poly_trim(den);
  if (den.empty()) throw std::domain_error("zero denominator");
  if (num.empty()) return Scalar::rational(rat_zero());
  Poly g = poly_gcd(p_, num, den);
  if (poly_deg(g) > 0 || (!g.empty() && g[0] != 1)) {
    num = poly_divmod(p_, num, g).first;
    den = poly_divmod(p_, den, g).first;
  }
  if (den.back() != 1) {
    uint32_t c = fp_inv(p_, den.back());
    num = poly_scale(p_, c, num);
    den = poly_scale(p_, c, den);
  }
  return Scalar::rational(std::make_shared<const RatData>(RatData{std::move(num), std::move(den)}));
}

Scalar Field::t() const {
  if (kind_ != FieldKind::RatFunc)
    throw std::invalid_argument("indeterminate requires a rational-function field");
  return Scalar::rational(std::make_shared<const RatData>(RatData{{0, 1}, {1}}));
}

bool Field::is_zero(const Scalar& a) const {
  check(a);
  return a.is_rational() ? a.rat().num.empty() : a.res() == 0;
}

bool Field::is_one(const Scalar& a) const { return a == one(); }

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (kind_ == FieldKind::Prime) return Scalar::residue(fp_add(p_, a.res(), b.res()));
  const RatData &x = a.rat(), &y = b.rat();
  Poly num = poly_add(p_, poly_mul(p_, x.num, y.den), poly_mul(p_, y.num, x.den));
  return from_fraction(std::move(num), poly_mul(p_, x.den, y.den));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
  check(a);
  if (kind_ == FieldKind::Prime) return Scalar::residue(fp_neg(p_, a.res()));
  if (a.rat().num.empty()) return a;
  return Scalar::rational(std::make_shared<const RatData>(
      RatData{poly_scale(p_, p_ - 1, a.rat().num), a.rat().den}));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (kind_ == FieldKind::Prime) return Scalar::residue(fp_mul(p_, a.res(), b.res()));
  const RatData &x = a.rat(), &y = b.rat();
  return from_fraction(poly_mul(p_, x.num, y.num), poly_mul(p_, x.den, y.den));
}

Scalar Field::inv(const Scalar& a) const {
  check(a);
  if (kind_ == FieldKind::Prime) return Scalar::residue(fp_inv(p_, a.res()));
  if (a.rat().num.empty()) throw std::domain_error("division by zero in F_p(t)");
  return from_fraction(a.rat().den, a.rat().num);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, uint64_t e) const {
  Scalar r = one(), x = a;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

namespace {
// f(t) = g(t)^p over F_p iff every exponent with a nonzero coefficient is a
// multiple of p; the root has coefficients f_{kp} (Frobenius fixes F_p).
std::optional<Poly> poly_pth_root(uint32_t p, const Poly& f) {
  Poly r;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i % p == 0)
      r.push_back(f[i]);
    else if (f[i] != 0)
      return std::nullopt;
  }
  poly_trim(r);
  return r;
}
}  // namespace

std::optional<Scalar> Field::pth_root(const Scalar& a) const {
  check(a);
  if (kind_ == FieldKind::Prime) {
    // x -> x^p is the identity on F_p
    return a;
  }
  auto rn = poly_pth_root(p_, a.rat().num);
  if (!rn) return std::nullopt;
  auto rd = poly_pth_root(p_, a.rat().den);
  if (!rd) return std::nullopt;
  return from_fraction(std::move(*rn), std::move(*rd));
}

std::string poly_to_string(const Poly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (!a[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i == 0) continue;
    if (a[i] != 1) os << "*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string Field::to_string(const Scalar& a) const {
  check(a);
  if (kind_ == FieldKind::Prime) return std::to_string(a.res());
  const RatData& r = a.rat();
  if (r.den == Poly{1}) return poly_to_string(r.num);
  return "(" + poly_to_string(r.num) + ")/(" + poly_to_string(r.den) + ")";
}

uint64_t scalar_hash(const Scalar& a) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  if (!a.is_rational()) {
    mix(a.res());
    return h;
  }
  mix(0x9e37ull);
  for (uint32_t c : a.rat().num) mix(c + 1);
  mix(0x79b9ull);
  for (uint32_t c : a.rat().den) mix(c + 1);
  return h;
}

}  // namespace fmb
