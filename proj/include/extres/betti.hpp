#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "extres/ideal.hpp"

namespace extres {

using BigInt = mpz_class;

// Truncated graded Betti numbers beta_{i,j}: i is the homological degree,
// j the internal degree. Only nonzero entries are stored.
class BettiTable {
public:
  explicit BettiTable(int i_max = 0) : i_max_(i_max) {}

  int i_max() const noexcept { return i_max_; }

  BigInt at(int i, int j) const;
  // beta_{i, i+row}: the Macaulay2 row indexing.
  BigInt at_row(int i, int row) const { return at(i, i + row); }
  BigInt total(int i) const;
  std::vector<BigInt> totals() const;

  // Rows j - i that carry a nonzero entry, ascending.
  std::vector<int> rows() const;

  void add(int i, int j, const BigInt& value);
  void set(int i, int j, const BigInt& value);

  const std::map<std::pair<int, int>, BigInt>& entries() const noexcept { return entries_; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  int i_max_;
  std::map<std::pair<int, int>, BigInt> entries_;
};

// C(total + parts - 1, parts - 1).
BigInt weak_compositions_count(unsigned long total, unsigned long parts);

// beta_{i,i+j}(I) = sum over u in G(I)_j of C(i + |set u| - 1, |set u| - 1).
// Rows j above j_max (when given) are left out.
BettiTable betti_lq(const LinearQuotientOrder& lq, int i_max, std::optional<int> j_max = std::nullopt);

// beta_{i,i+j}(I) = sum over u in G(I)_j of C(m(u) + i - 1, m(u) - 1). Throws
// NotStable.
BettiTable betti_stable(const MonomialIdeal& ideal, int i_max);

// Coefficients of sum beta_{i,j} t^i s^j up to i_max.
class PoincareTruncation {
public:
  explicit PoincareTruncation(const BettiTable& table) : table_(table) {}

  BigInt coefficient(int i, int j) const { return table_.at(i, j); }
  int i_max() const noexcept { return table_.i_max(); }
  bool is_zero() const noexcept { return table_.entries().empty(); }
  const BettiTable& table() const noexcept { return table_; }

  // e.g. "2*s^2 + s^3 + 5*t*s^3 + ..."
  std::string to_string() const;

private:
  BettiTable table_;
};

PoincareTruncation poincare(const LinearQuotientOrder& lq, int i_max,
                            std::optional<int> j_max = std::nullopt);

struct ComplexityDepth {
  int complexity;
  int depth;
  // depth = n - cx only holds over an infinite field.
  bool assumes_infinite_field = true;
};

// cx(E/I) = max |set(u)|, depth(E/I) = n - cx. Throws ZeroIdeal for I = 0.
ComplexityDepth complexity_and_depth(const LinearQuotientOrder& lq);

}  // namespace extres
