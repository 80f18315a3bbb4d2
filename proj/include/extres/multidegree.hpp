#pragma once

#include <string>
#include <vector>

#include "extres/exterior.hpp"

namespace extres {

// Exponent vector a in N^n of a divided power x^(a) = x_1^(a_1) ... x_n^(a_n).
class Multidegree {
public:
  explicit Multidegree(Ambient ambient) : exps_(static_cast<std::size_t>(ambient.n()), 0) {}
  explicit Multidegree(std::vector<int> exps) : exps_(std::move(exps)) {}

  int n() const noexcept { return static_cast<int>(exps_.size()); }
  // 1-based.
  int operator[](int k) const { return exps_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  int total() const;
  IndexSet support() const;
  bool is_zero() const { return support() == 0; }

  // a - eps_k; requires a_k > 0.
  Multidegree minus_unit(int k) const;
  Multidegree plus_unit(int k) const;

  std::string to_string() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

private:
  std::vector<int> exps_;
};

// All a with |a| = total and supp(a) ⊆ allowed, in decreasing lexicographic
// order of the exponent vector (the smallest variable takes the most first).
std::vector<Multidegree> compositions(Ambient ambient, IndexSet allowed, int total);

}  // namespace extres
