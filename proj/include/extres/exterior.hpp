#pragma once

// Monomials of the exterior algebra E = K<e_1, ..., e_n>.
//
// An index set mu ⊆ [n] is a 64-bit word in which bit k stands for e_k
// (bit 0 is never used), so n is capped at 63.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace extres {

using IndexSet = std::uint64_t;

inline constexpr int kMaxVariables = 63;

constexpr IndexSet singleton(int k) { return IndexSet{1} << k; }

// {1, ..., k}; empty for k <= 0.
constexpr IndexSet initial_segment(int k) {
  return k <= 0 ? IndexSet{0} : ((IndexSet{1} << (k + 1)) - 2);
}

constexpr int cardinality(IndexSet s) { return std::popcount(s); }

// Largest index in s, 0 for the empty set.
constexpr int max_index(IndexSet s) { return s == 0 ? 0 : 63 - std::countl_zero(s); }

constexpr int min_index(IndexSet s) { return s == 0 ? 0 : std::countr_zero(s); }

constexpr bool is_subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }

IndexSet make_index_set(std::initializer_list<int> indices);
IndexSet make_index_set(std::span<const int> indices);
std::vector<int> indices_of(IndexSet s);

// Number of pairs (i, j) with i in tau, j in mu and i > j.
int sigma(IndexSet tau, IndexSet mu);

// (-1)^sigma(tau, mu): the sign of e_tau ∧ e_mu relative to e_{tau ∪ mu}.
inline int wedge_sign(IndexSet tau, IndexSet mu) { return (sigma(tau, mu) & 1) ? -1 : 1; }

// Number of variables of the ambient exterior algebra.
class Ambient {
public:
  explicit Ambient(int n);

  int n() const noexcept { return n_; }
  IndexSet all() const noexcept { return initial_segment(n_); }
  bool contains(IndexSet s) const noexcept { return is_subset(s, all()); }

  friend bool operator==(Ambient, Ambient) = default;

private:
  int n_;
};

void require_same_ambient(Ambient a, Ambient b);

// A signed monomial ±e_mu.
class Monomial {
public:
  Monomial(Ambient ambient, IndexSet indices, int sign = 1);

  static Monomial unit(Ambient ambient) { return Monomial(ambient, 0, 1); }
  static Monomial variable(Ambient ambient, int k) { return Monomial(ambient, singleton(k), 1); }
  static Monomial of(Ambient ambient, std::initializer_list<int> indices, int sign = 1) {
    return Monomial(ambient, make_index_set(indices), sign);
  }

  Ambient ambient() const noexcept { return ambient_; }
  IndexSet support() const noexcept { return indices_; }
  int sign() const noexcept { return sign_; }
  int degree() const noexcept { return cardinality(indices_); }
  // m(u): largest index in the support, 0 for the unit.
  int max_index() const noexcept { return extres::max_index(indices_); }
  bool is_unit() const noexcept { return indices_ == 0; }

  Monomial negated() const { return Monomial(ambient_, indices_, -sign_); }
  Monomial unsigned_copy() const { return Monomial(ambient_, indices_, 1); }

  // e1*e3*e4, -e1*e2 or 1.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  Ambient ambient_;
  IndexSet indices_;
  int sign_;
};

// u ∧ v, or nullopt when the supports meet.
std::optional<Monomial> wedge(const Monomial& u, const Monomial& v);

// The unique signed monomial w with w ∧ v = u. Throws NotDivisible unless
// supp(v) ⊆ supp(u).
Monomial quotient(const Monomial& u, const Monomial& v);

}  // namespace extres
