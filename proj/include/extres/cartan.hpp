#pragma once

// Betti numbers by brute force: Tor_i^E(E/I, K) is the homology of the Cartan
// complex C.(e_1, ..., e_n; E/I), computed blockwise in each internal degree
// by exact rank computations.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "extres/betti.hpp"
#include "extres/field.hpp"
#include "extres/ideal.hpp"
#include "extres/linalg.hpp"
#include "extres/multidegree.hpp"

namespace extres {

// e_mu x^(a): a K-basis element of C_{|a|}(e; E/I) of internal degree |mu| + |a|.
struct CartanChain {
  IndexSet mu;
  Multidegree a;

  friend bool operator==(const CartanChain&, const CartanChain&) = default;
};

class CartanComplex {
public:
  explicit CartanComplex(const MonomialIdeal& ideal);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }

  // Monomials of degree d not in I.
  const std::vector<IndexSet>& standard_monomials(int d) const;

  std::size_t dimension(int i, int degree) const;
  // Basis of C_i in the given internal degree: divided power major, monomial minor.
  std::vector<CartanChain> basis(int i, int degree) const;
  std::size_t index_of(const CartanChain& c) const;

  // d(e_mu x^(a)) = sum over k in supp(a) of (e_k ∧ e_mu) x^(a - eps_k), with
  // monomials in I dropped. Coefficients are +-1.
  std::vector<std::pair<CartanChain, int>> boundary(const CartanChain& c) const;

  // Matrix of C_{i, degree} -> C_{i-1, degree}; requires i >= 1.
  linalg::SparseMatrix differential(int i, int degree) const;

private:
  const std::vector<Multidegree>& divided_powers(int i) const;

  MonomialIdeal ideal_;
  std::vector<std::vector<IndexSet>> standard_;
  std::vector<std::map<IndexSet, std::size_t>> standard_pos_;
  mutable std::map<int, std::vector<Multidegree>> powers_;
  mutable std::map<int, std::map<Multidegree, std::size_t>> power_pos_;
};

struct OracleLimits {
  // Largest admissible block (rows or columns) before giving up.
  std::size_t max_block_dimension = 250000;
};

struct OracleBlock {
  int homological;
  int degree;
  std::size_t dimension;
  std::size_t boundary_rank;  // rank of C_i -> C_{i-1} in this degree
  std::size_t homology;
};

struct OracleResult {
  Field field;
  BettiTable quotient;  // beta_{i,j}(E/I), 0 <= i <= i_max + 1
  BettiTable ideal;     // beta_{i,j}(I) = beta_{i+1,j}(E/I), 0 <= i <= i_max
  std::vector<OracleBlock> blocks;
};

// Throws ResourceLimit when a block exceeds the limits.
OracleResult oracle_betti(const MonomialIdeal& ideal, int i_max, std::optional<int> j_max,
                          const Field& field, OracleLimits limits = {});

// For a stable ideal: the cycles e_{mu \ m(u)} x^(a) with u in G(I), |a| = i
// and max supp(a) = m(u). Each is checked to be a cycle and the count is
// checked against the closed formula. Throws NotStable.
std::vector<CartanChain> stable_cycle_basis(const MonomialIdeal& ideal, int i);

}  // namespace extres
