#include "extres/cartan.hpp"

#include <algorithm>
#include <string>

#include "extres/errors.hpp"

namespace extres {

CartanComplex::CartanComplex(const MonomialIdeal& ideal) : ideal_(ideal) {
  int n = ideal.ambient().n();
  if (n > 24) throw ResourceLimit("Cartan oracle enumerates 2^n monomials; n=" + std::to_string(n) + " is too large");
  standard_.resize(static_cast<std::size_t>(n) + 1);
  standard_pos_.resize(static_cast<std::size_t>(n) + 1);
  IndexSet all = ideal.ambient().all();
  // Walk all subsets of {1..n} (bit 0 is never set).
  for (IndexSet mu = all;; mu = (mu - 1) & all) {
    if (!ideal.contains(mu)) standard_[static_cast<std::size_t>(cardinality(mu))].push_back(mu);
    if (mu == 0) break;
  }
  for (std::size_t d = 0; d < standard_.size(); ++d) {
    auto& v = standard_[d];
    std::sort(v.begin(), v.end());
    for (std::size_t k = 0; k < v.size(); ++k) standard_pos_[d][v[k]] = k;
  }
}

const std::vector<IndexSet>& CartanComplex::standard_monomials(int d) const {
  static const std::vector<IndexSet> empty;
  if (d < 0 || d >= static_cast<int>(standard_.size())) return empty;
  return standard_[static_cast<std::size_t>(d)];
}

const std::vector<Multidegree>& CartanComplex::divided_powers(int i) const {
  auto it = powers_.find(i);
  if (it != powers_.end()) return it->second;
  auto list = compositions(ideal_.ambient(), ideal_.ambient().all(), i);
  auto& pos = power_pos_[i];
  for (std::size_t k = 0; k < list.size(); ++k) pos[list[k]] = k;
  return powers_.emplace(i, std::move(list)).first->second;
}

std::size_t CartanComplex::dimension(int i, int degree) const {
  if (i < 0) return 0;
  return divided_powers(i).size() * standard_monomials(degree - i).size();
}

std::vector<CartanChain> CartanComplex::basis(int i, int degree) const {
  std::vector<CartanChain> out;
  if (i < 0) return out;
  const auto& mons = standard_monomials(degree - i);
  for (const auto& a : divided_powers(i)) {
    for (IndexSet mu : mons) out.push_back({mu, a});
  }
  return out;
}

std::size_t CartanComplex::index_of(const CartanChain& c) const {
  int i = c.a.total();
  divided_powers(i);
  auto d = static_cast<std::size_t>(cardinality(c.mu));
  std::size_t a_idx = power_pos_.at(i).at(c.a);
  std::size_t mu_idx = standard_pos_.at(d).at(c.mu);
  return a_idx * standard_[d].size() + mu_idx;
}

std::vector<std::pair<CartanChain, int>> CartanComplex::boundary(const CartanChain& c) const {
  std::vector<std::pair<CartanChain, int>> out;
  for (int k : indices_of(c.a.support())) {
    if (c.mu & singleton(k)) continue;
    IndexSet nu = c.mu | singleton(k);
    if (ideal_.contains(nu)) continue;
    out.push_back({CartanChain{nu, c.a.minus_unit(k)}, wedge_sign(singleton(k), c.mu)});
  }
  return out;
}

linalg::SparseMatrix CartanComplex::differential(int i, int degree) const {
  if (i < 1) throw InvalidArgument("Cartan differential needs i >= 1");
  linalg::SparseMatrix m;
  m.rows = dimension(i - 1, degree);
  const auto& mons = standard_monomials(degree - i);
  const auto& powers = divided_powers(i);
  m.columns.reserve(powers.size() * mons.size());
  for (const auto& a : powers) {
    for (IndexSet mu : mons) {
      linalg::SparseVector col;
      for (auto& [chain, sign] : boundary(CartanChain{mu, a})) col.emplace_back(index_of(chain), Scalar(sign));
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      m.columns.push_back(std::move(col));
    }
  }
  return m;
}

OracleResult oracle_betti(const MonomialIdeal& ideal, int i_max, std::optional<int> j_max,
                          const Field& field, OracleLimits limits) {
  if (i_max < 0) throw InvalidArgument("i_max must be nonnegative");
  CartanComplex complex(ideal);
  int n = ideal.ambient().n();
  int top = i_max + 1;  // homological degrees of E/I that are needed

  std::map<std::pair<int, int>, std::size_t> ranks;
  auto boundary_rank = [&](int i, int degree) -> std::size_t {
    if (i < 1) return 0;
    auto key = std::make_pair(i, degree);
    if (auto it = ranks.find(key); it != ranks.end()) return it->second;
    std::size_t cols = complex.dimension(i, degree);
    std::size_t rows = complex.dimension(i - 1, degree);
    if (cols > limits.max_block_dimension || rows > limits.max_block_dimension) {
      throw ResourceLimit("Cartan block (i=" + std::to_string(i) + ", degree=" + std::to_string(degree) +
                          ") is " + std::to_string(rows) + "x" + std::to_string(cols) + ", above the limit of " +
                          std::to_string(limits.max_block_dimension));
    }
    std::size_t r = (cols == 0 || rows == 0) ? 0 : linalg::rank(complex.differential(i, degree), field);
    ranks.emplace(key, r);
    return r;
  };

  OracleResult result{field, BettiTable(top), BettiTable(i_max), {}};
  for (int i = 0; i <= top; ++i) {
    for (int degree = i; degree <= i + n; ++degree) {
      // Row of the ideal's table is degree - (i - 1).
      if (j_max && i >= 1 && degree - (i - 1) > *j_max) continue;
      std::size_t dim = complex.dimension(i, degree);
      if (dim == 0) continue;
      std::size_t out_rank = boundary_rank(i, degree);
      std::size_t in_rank = boundary_rank(i + 1, degree);
      std::size_t h = dim - out_rank - in_rank;
      result.blocks.push_back({i, degree, dim, out_rank, h});
      result.quotient.set(i, degree, BigInt(static_cast<unsigned long>(h)));
      if (i >= 1) result.ideal.set(i - 1, degree, BigInt(static_cast<unsigned long>(h)));
    }
  }
  return result;
}

std::vector<CartanChain> stable_cycle_basis(const MonomialIdeal& ideal, int i) {
  if (!is_stable(ideal)) throw NotStable("ideal " + ideal.to_string() + " is not stable");
  if (i < 1) throw InvalidArgument("stable cycles live in homological degree i >= 1");
  CartanComplex complex(ideal);
  Ambient amb = ideal.ambient();
  std::vector<CartanChain> out;
  BigInt expected = 0;
  for (const auto& u : ideal.generators()) {
    int m = u.max_index();
    if (m == 0) throw InvalidArgument("the unit ideal has no cycles to list");
    IndexSet mu = u.support() & ~singleton(m);
    // a = b + eps_m with |b| = i - 1 and supp(b) ⊆ [m].
    for (const auto& b : compositions(amb, initial_segment(m), i - 1)) {
      CartanChain c{mu, b.plus_unit(m)};
      if (!complex.boundary(c).empty()) {
        throw Error("internal: " + u.to_string() + " gives a non-cycle at a=" + c.a.to_string());
      }
      out.push_back(std::move(c));
    }
    BigInt count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(m + i - 2), static_cast<unsigned long>(m - 1));
    expected += count;
  }
  if (BigInt(static_cast<unsigned long>(out.size())) != expected) {
    throw Error("internal: stable cycle count disagrees with the closed formula");
  }
  return out;
}

}  // namespace extres
