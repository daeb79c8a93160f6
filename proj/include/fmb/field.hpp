#pragma once
// Exact scalar arithmetic: prime fields F_p and rational functions F_p(t).
// Every value is kept in canonical form so that operator== is exact equality.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmb {

// ---- F_p residues ---------------------------------------------------------

inline uint32_t fp_add(uint32_t p, uint32_t a, uint32_t b) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint32_t fp_sub(uint32_t p, uint32_t a, uint32_t b) {
  return a >= b ? a - b : a + p - b;
}
inline uint32_t fp_neg(uint32_t p, uint32_t a) { return a ? p - a : 0; }
inline uint32_t fp_mul(uint32_t p, uint32_t a, uint32_t b) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
uint32_t fp_pow(uint32_t p, uint32_t a, uint64_t e);
uint32_t fp_inv(uint32_t p, uint32_t a);  // throws on a == 0

// ---- polynomials over F_p -------------------------------------------------
// Coefficients little-endian (index = degree). Normalized: no trailing zeros,
// so the zero polynomial is the empty vector.

using Poly = std::vector<uint32_t>;

void poly_trim(Poly& a);
inline int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline bool poly_is_zero(const Poly& a) { return a.empty(); }

Poly poly_add(uint32_t p, const Poly& a, const Poly& b);
Poly poly_sub(uint32_t p, const Poly& a, const Poly& b);
Poly poly_mul(uint32_t p, const Poly& a, const Poly& b);
Poly poly_scale(uint32_t p, uint32_t c, const Poly& a);
// division with remainder; b must be nonzero
std::pair<Poly, Poly> poly_divmod(uint32_t p, const Poly& a, const Poly& b);
Poly poly_gcd(uint32_t p, Poly a, Poly b);  // monic unless both zero

// ---- scalars --------------------------------------------------------------

struct RatData {
  Poly num, den;  // canonical: den monic, gcd(num,den)=1; zero is num={}, den={1}
};

class Scalar {
 public:
  Scalar() = default;  // prime-kind zero
  static Scalar residue(uint32_t r) {
    Scalar s;
    s.r_ = r;
    return s;
  }
  static Scalar rational(std::shared_ptr<const RatData> d) {
    Scalar s;
    s.rat_ = std::move(d);
    return s;
  }
  bool is_rational() const { return static_cast<bool>(rat_); }
  uint32_t res() const { return r_; }
  const RatData& rat() const { return *rat_; }
  const std::shared_ptr<const RatData>& rat_ptr() const { return rat_; }

  bool operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (!is_rational()) return r_ == o.r_;
    if (rat_ == o.rat_) return true;
    return rat_->num == o.rat_->num && rat_->den == o.rat_->den;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  uint32_t r_ = 0;
  std::shared_ptr<const RatData> rat_;
};

enum class FieldKind { Prime, RatFunc };

// Field descriptor; all scalar arithmetic goes through it so the kind and the
// characteristic stay attached to the values they govern.
class Field {
 public:
  Field() : kind_(FieldKind::Prime), p_(2) {}
  static Field prime(uint32_t p);
  static Field rational(uint32_t p);  // F_p(t)

  FieldKind kind() const { return kind_; }
  uint32_t p() const { return p_; }
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(int64_t n) const;
  // builds a canonical value from an arbitrary fraction; den must be nonzero
  Scalar from_fraction(Poly num, Poly den) const;
  Scalar t() const;  // the indeterminate; rational kind only

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, uint64_t e) const;

  // a = b^p for some b?  Returns the witness b if so.
  std::optional<Scalar> pth_root(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;

 private:
  void check(const Scalar& a) const {
    if (a.is_rational() != (kind_ == FieldKind::RatFunc))
      throw std::invalid_argument("scalar kind does not match field");
  }
  FieldKind kind_;
  uint32_t p_;
};

uint64_t scalar_hash(const Scalar& a);
std::string poly_to_string(const Poly& a);

}  // namespace fmb
