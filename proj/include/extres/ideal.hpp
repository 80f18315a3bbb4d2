#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extres/exterior.hpp"

namespace extres {

// A monomial ideal of E given by its minimal generating set G(I).
//
// Generators carry sign +1 and are stored sorted by degree, then
// lexicographically on their sorted index lists ([1,3] < [1,4] < [2,4,6]).
class MonomialIdeal {
public:
  // The zero ideal.
  explicit MonomialIdeal(Ambient ambient) : ambient_(ambient) {}

  Ambient ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }

  // G(I)_j.
  std::vector<Monomial> generators_of_degree(int j) const;

  // Membership of the monomial e_mu (sign irrelevant).
  bool contains(IndexSet mu) const;
  bool contains(const Monomial& u) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal minimalize(Ambient, std::span<const Monomial>);

private:
  Ambient ambient_;
  std::vector<Monomial> generators_;
};

// Canonical generator ordering used by MonomialIdeal.
bool degree_lex_less(IndexSet a, IndexSet b);

// Lexicographic comparison of the sorted index lists, so that [1,3] < [1,4] < [2].
bool index_lex_less(IndexSet a, IndexSet b);

// Drops duplicates and generators divisible by another generator.
MonomialIdeal minimalize(Ambient ambient, std::span<const Monomial> gens);
MonomialIdeal make_ideal(Ambient ambient, std::initializer_list<std::initializer_list<int>> gens);

// I : (u) = (supp u) + sum over v in G(I) of (e_{supp v \ supp u}).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

// Ideal generated by a prefix of an ordering (u_1, ..., u_k).
MonomialIdeal ideal_of(Ambient ambient, std::span<const Monomial> gens);

// An ordering u_1, ..., u_r of G(I) with linear quotients, together with
// set(u_j) = {k : e_k in (u_1, ..., u_{j-1}) : (u_j)}.
class LinearQuotientOrder {
public:
  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  Ambient ambient() const noexcept { return ideal_.ambient(); }
  const std::vector<Monomial>& order() const noexcept { return order_; }
  const std::vector<IndexSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return order_.size(); }
  const Monomial& generator(std::size_t j) const { return order_.at(j); }
  IndexSet set(std::size_t j) const { return sets_.at(j); }

  // Position of a generator (by support) in the order.
  std::optional<std::size_t> position(IndexSet support) const;

  // deg u_1 <= ... <= deg u_r. The Betti formulas and the mapping cone
  // construction need this; the colon condition alone does not.
  bool degree_increasing() const;
  // Throws InvalidArgument unless degree_increasing().
  void require_degree_increasing() const;

private:
  friend class LqCheck;
  LinearQuotientOrder(MonomialIdeal ideal, std::vector<Monomial> order, std::vector<IndexSet> sets)
      : ideal_(std::move(ideal)), order_(std::move(order)), sets_(std::move(sets)) {}

  MonomialIdeal ideal_;
  std::vector<Monomial> order_;
  std::vector<IndexSet> sets_;
};

// Outcome of check_linear_quotients.
class LqCheck {
public:
  enum class Failure {
    none,
    // Some colon ideal has a minimal generator of degree >= 2.
    nonlinear_colon,
  };

  bool ok() const noexcept { return order_.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
  const LinearQuotientOrder& order() const { return order_.value(); }

  Failure failure() const noexcept { return failure_; }
  // 1-based position j of the first violation.
  std::size_t failing_position() const noexcept { return position_; }
  // The offending minimal generator of the colon ideal at position j.
  const std::optional<Monomial>& obstruction() const noexcept { return obstruction_; }
  std::string describe() const;

  static LqCheck run(const MonomialIdeal& ideal, std::span<const Monomial> order);

private:
  LqCheck() = default;
  std::optional<LinearQuotientOrder> order_;
  Failure failure_ = Failure::none;
  std::size_t position_ = 0;
  std::optional<Monomial> obstruction_;
};

// `order` must be a permutation of G(I) (signs ignored).
LqCheck check_linear_quotients(const MonomialIdeal& ideal, std::span<const Monomial> order);
// Order given as 0-based positions into ideal.generators().
LqCheck check_linear_quotients(const MonomialIdeal& ideal, std::span<const std::size_t> permutation);

struct LqSearchStats {
  std::size_t colon_checks = 0;
  // Failed branches of the search tree.
  std::size_t dead_ends = 0;
  // Complete degree-increasing orders eliminated by those failures
  // (saturates at the maximum of the type).
  std::uint64_t orders_ruled_out = 0;
};

// Backtracking over degree-increasing orders; candidates within a degree are
// tried in lexicographic order.
std::optional<LinearQuotientOrder> find_lq_order(const MonomialIdeal& ideal,
                                                 LqSearchStats* stats = nullptr);

// Degree first, then reverse lexicographic (compare largest indices first).
std::vector<Monomial> reverse_deglex_order(const MonomialIdeal& ideal);

bool is_stable(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);

}  // namespace extres
