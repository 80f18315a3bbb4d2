#pragma once

// Vector-spread monomials and vector-spread strongly stable ideals.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extres/betti.hpp"
#include "extres/ideal.hpp"

namespace extres {

// t = (t_1, ..., t_{d-1}); a monomial e_{i_1} ... e_{i_l} with l <= d is
// t-spread when i_{h+1} - i_h >= t_h for every h.
class TSpreadVector {
public:
  explicit TSpreadVector(std::vector<int> gaps);
  // (1, ..., 1) with d - 1 entries: every monomial of degree <= d qualifies.
  static TSpreadVector ones(int d) { return TSpreadVector(std::vector<int>(static_cast<std::size_t>(d - 1), 1)); }
  // "2,2" -> (2, 2).
  static TSpreadVector parse(std::string_view text);

  // d: the largest degree for which thresholds are defined.
  int max_degree() const noexcept { return static_cast<int>(gaps_.size()) + 1; }
  const std::vector<int>& gaps() const noexcept { return gaps_; }
  int gap(int h) const { return gaps_.at(static_cast<std::size_t>(h - 1)); }

  std::string to_string() const;

  friend bool operator==(const TSpreadVector&, const TSpreadVector&) = default;

private:
  std::vector<int> gaps_;
};

// Throws NotTSpread when deg(u) exceeds t.max_degree().
bool is_tspread(IndexSet u, const TSpreadVector& t);
bool is_tspread(const Monomial& u, const TSpreadVector& t);

// Checked on generators only. Throws NotTSpread if a generator is not t-spread.
bool is_tspread_strongly_stable(const MonomialIdeal& ideal, const TSpreadVector& t);

// Smallest t-spread strongly stable ideal containing the seeds.
MonomialIdeal tspread_closure(Ambient ambient, std::span<const Monomial> seeds, const TSpreadVector& t);

// [m(u)] minus the union of [j_h + 1, j_h + t_h - 1] for u = e_{j_1} ... e_{j_l}.
IndexSet set_e_formula(const Monomial& u, const TSpreadVector& t);

// beta_{i,i+j} = sum over u in G(I)_j of C(m(u) - sum_{h<j}(t_h - 1) + i - 1, i).
// Throws NotTSpread if I is not t-spread strongly stable.
BettiTable betti_tspread(const MonomialIdeal& ideal, const TSpreadVector& t, int i_max);

enum class LexDirection {
  // Largest first: e1e3 before e1e4 before e2e4e6.
  decreasing,
  increasing,
};

// G(I) in degree-increasing order, lexicographic within each degree, checked
// for linear quotients and for agreement of every set(u) with
// set_e_formula(u). Throws Error on either failure.
LinearQuotientOrder lex_lq_order(const MonomialIdeal& ideal, const TSpreadVector& t,
                                 LexDirection direction = LexDirection::decreasing);

}  // namespace extres
