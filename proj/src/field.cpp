#include "extres/field.hpp"

#include <charconv>

#include "extres/errors.hpp"

namespace extres {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_of(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  // Products of two residues must fit in 64 bits.
  if (p >= (1u << 31)) throw InvalidArgument("prime too large");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text == "gf2") return gf2();
  if (text.substr(0, 4) == "gfp:") {
    std::uint32_t p = 0;
    auto digits = text.substr(4);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw InvalidArgument("unknown field '" + std::string(text) + "' (expected qq, gf2 or gfp:P)");
}

std::string Field::name() const {
  if (p_ == 0) return "qq";
  if (p_ == 2) return "gf2";
  return "gfp:" + std::to_string(p_);
}

std::uint32_t Field::residue(const Scalar& x) const {
  std::uint32_t num = mod_of(x.get_num(), p_);
  std::uint32_t den = mod_of(x.get_den(), p_);
  if (den == 0) throw InvalidArgument("denominator vanishes in " + name());
  return static_cast<std::uint32_t>(std::uint64_t{num} * pow_mod(den, p_ - 2, p_) % p_);
}

Scalar Field::normalize(const Scalar& x) const {
  if (p_ == 0) return x;
  if (x.get_den() == 1 && x >= 0 && x < p_) return x;
  return Scalar(residue(x));
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw InvalidArgument("division by zero");
  if (p_ == 0) return Scalar(1) / a;
  return Scalar(pow_mod(residue(a), p_ - 2, p_));
}

}  // namespace extres
