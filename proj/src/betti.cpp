#include "extres/betti.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "extres/errors.hpp"

namespace extres {

BigInt BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt BettiTable::total(int i) const {
  BigInt sum = 0;
  for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
       it != entries_.end() && it->first.first == i; ++it) {
    sum += it->second;
  }
  return sum;
}

std::vector<BigInt> BettiTable::totals() const {
  std::vector<BigInt> out;
  for (int i = 0; i <= i_max_; ++i) out.push_back(total(i));
  return out;
}

std::vector<int> BettiTable::rows() const {
  std::set<int> rows;
  for (const auto& [key, v] : entries_) rows.insert(key.second - key.first);
  return {rows.begin(), rows.end()};
}

void BettiTable::add(int i, int j, const BigInt& value) {
  if (value == 0) return;
  BigInt& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

void BettiTable::set(int i, int j, const BigInt& value) {
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

BigInt weak_compositions_count(unsigned long total, unsigned long parts) {
  if (parts == 0) throw InvalidArgument("weak compositions need at least one part");
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), total + parts - 1, parts - 1);
  return out;
}

BettiTable betti_lq(const LinearQuotientOrder& lq, int i_max, std::optional<int> j_max) {
  if (i_max < 0) throw InvalidArgument("i_max must be nonnegative");
  lq.require_degree_increasing();
  BettiTable table(i_max);
  for (std::size_t k = 0; k < lq.size(); ++k) {
    int j = lq.generator(k).degree();
    if (j_max && j > *j_max) continue;
    auto set_size = static_cast<unsigned long>(cardinality(lq.set(k)));
    for (int i = 0; i <= i_max; ++i) {
      table.add(i, i + j, weak_compositions_count(static_cast<unsigned long>(i), set_size));
    }
  }
  return table;
}

BettiTable betti_stable(const MonomialIdeal& ideal, int i_max) {
  if (!is_stable(ideal)) throw NotStable("ideal " + ideal.to_string() + " is not stable");
  if (i_max < 0) throw InvalidArgument("i_max must be nonnegative");
  BettiTable table(i_max);
  for (const auto& u : ideal.generators()) {
    if (u.is_unit()) throw InvalidArgument("the unit ideal has no resolution to tabulate");
    auto m = static_cast<unsigned long>(u.max_index());
    for (int i = 0; i <= i_max; ++i) {
      BigInt b;
      mpz_bin_uiui(b.get_mpz_t(), m + static_cast<unsigned long>(i) - 1, m - 1);
      table.add(i, i + u.degree(), b);
    }
  }
  return table;
}

std::string PoincareTruncation::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : table_.entries()) {
    auto [i, j] = key;
    if (!first) os << " + ";
    first = false;
    bool bare = true;
    if (c != 1) {
      os << c.get_str();
      bare = false;
    }
    auto factor = [&](const char* var, int e) {
      if (e == 0) return;
      if (!bare) os << '*';
      os << var;
      if (e > 1) os << '^' << e;
      bare = false;
    };
    factor("t", i);
    factor("s", j);
    if (bare) os << '1';
  }
  return os.str();
}

PoincareTruncation poincare(const LinearQuotientOrder& lq, int i_max, std::optional<int> j_max) {
  return PoincareTruncation(betti_lq(lq, i_max, j_max));
}

ComplexityDepth complexity_and_depth(const LinearQuotientOrder& lq) {
  if (lq.ideal().is_zero()) throw ZeroIdeal("E/0 = E is free; complexity is not defined by set sizes");
  lq.require_degree_increasing();
  int cx = 0;
  for (IndexSet s : lq.sets()) cx = std::max(cx, cardinality(s));
  return {cx, lq.ambient().n() - cx, true};
}

}  // namespace extres
