#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace extres {

// Coefficients are carried as rationals. Over GF(p) they are kept reduced to
// integer representatives in [0, p).
using Scalar = mpq_class;

// The coefficient field K: either Q or a prime field GF(p).
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  static Field gf2() { return prime(2); }

  // Accepts "qq", "gf2" and "gfp:P".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar normalize(const Scalar& x) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;

  // Image of a rational in GF(p) as a machine integer; p must be nonzero.
  std::uint32_t residue(const Scalar& x) const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

}  // namespace extres
