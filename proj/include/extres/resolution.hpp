#pragma once

// Minimal graded free resolutions of E/I for ideals with linear quotients,
// built by iterated mapping cones over Cartan complexes.
//
// F_0 = E with a single basis element of degree 0. For i >= 1 the basis of
// F_i consists of symbols f(a; u) with u in G(I), supp(a) ⊆ set(u) and
// |a| = i - 1, ordered by the position of u in the linear quotient order and
// then by decreasing lexicographic order of a. E acts on the left.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extres/element.hpp"
#include "extres/field.hpp"
#include "extres/ideal.hpp"
#include "extres/linalg.hpp"
#include "extres/multidegree.hpp"

namespace extres {

// f(a; u) with u = the generator at `generator` in the linear quotient order.
struct ResolutionSymbol {
  Multidegree a;
  std::size_t generator;
  // |a| + deg u.
  int degree;

  friend bool operator==(const ResolutionSymbol&, const ResolutionSymbol&) = default;
};

// Basis index of F_{i} -> coefficient in E.
using ModuleVector = std::map<std::size_t, Element>;

std::vector<ResolutionSymbol> basis(const LinearQuotientOrder& lq, int i);

// f(a; u), or nullopt when supp(a) is not contained in set(u).
std::optional<ResolutionSymbol> make_symbol(const LinearQuotientOrder& lq, const Multidegree& a,
                                            std::size_t generator);

class FreeComplex {
public:
  FreeComplex(LinearQuotientOrder lq, Field field, int i_max);

  const LinearQuotientOrder& lq() const noexcept { return lq_; }
  const Field& field() const noexcept { return field_; }
  Ambient ambient() const noexcept { return lq_.ambient(); }
  int i_max() const noexcept { return i_max_; }

  std::size_t rank(int i) const;
  int degree(int i, std::size_t k) const;
  // Symbols of F_i for 1 <= i <= i_max.
  const std::vector<ResolutionSymbol>& symbols(int i) const;
  std::optional<std::size_t> find(int i, const Multidegree& a, std::size_t generator) const;

  // d_i applied to the k-th basis element of F_i, 1 <= i <= i_max.
  const ModuleVector& image(int i, std::size_t k) const;
  ModuleVector& mutable_image(int i, std::size_t k);

  std::size_t append(int i, ResolutionSymbol symbol, ModuleVector image);

private:
  LinearQuotientOrder lq_;
  Field field_;
  int i_max_;
  std::vector<std::vector<ResolutionSymbol>> symbols_;  // index 0 unused
  std::vector<std::vector<ModuleVector>> images_;       // index 0 unused
  std::vector<std::map<std::pair<std::size_t, Multidegree>, std::size_t>> lookup_;
};

// The decomposition function g: M(I) -> G(I), g(u) = u_j for the smallest j
// with u in (u_1, ..., u_j).
class DecompositionFunction {
public:
  explicit DecompositionFunction(LinearQuotientOrder lq) : lq_(std::move(lq)) {}

  const LinearQuotientOrder& lq() const noexcept { return lq_; }

  struct Decomposition {
    std::size_t generator;  // position of g(u) in the order
    Monomial g;
    Monomial c;  // u = g ∧ c, signs included
  };

  // Throws NotInIdeal.
  Decomposition decompose(const Monomial& u) const;
  std::size_t g_index(IndexSet u) const;

  struct Witness {
    std::size_t generator;  // u
    int s;                  // s in set(u) \ supp(u) with set(g(e_s u)) not inside set(u)
    std::size_t image;      // position of g(e_s u)
  };

  std::optional<Witness> regularity_violation() const;
  bool is_regular() const { return !regularity_violation().has_value(); }

private:
  LinearQuotientOrder lq_;
};

// Backtracking over degree-increasing orders for one that has linear quotients
// and a regular decomposition function. Regularity at position k only depends
// on u_1, ..., u_k, so failing prefixes are cut immediately. Returns nullopt
// when no such order exists; throws ResourceLimit after max_nodes prefixes.
std::optional<LinearQuotientOrder> find_regular_lq_order(const MonomialIdeal& ideal,
                                                         std::size_t max_nodes = 1000000);

// Explicit differential d: F_i -> F_{i-1} for a regular decomposition
// function. Entry k of the result is the image of the k-th symbol of basis(lq, i).
// Throws NotRegular.
std::vector<ModuleVector> differential_regular(const DecompositionFunction& df, int i, const Field& field);

// Whole complex F_0 <- ... <- F_{i_max} from the explicit differentials.
FreeComplex resolve_regular(const DecompositionFunction& df, int i_max, const Field& field);

// Iterated mapping cones with comparison maps found by exact linear solves.
// No regularity assumption.
FreeComplex lift_mapping_cone(const LinearQuotientOrder& lq, int i_max, const Field& field);

struct HomologyBlock {
  int homological;
  int degree;
  std::size_t dimension;
  std::size_t homology;
};

// exact and resolves_quotient are false when they could not be established,
// which is the case for an inhomogeneous complex.
struct VerifyReport {
  bool d_squared_zero = true;
  bool minimal = true;
  bool homogeneous = true;
  // H_i = 0 for 1 <= i <= i_max - 1 in every internal degree.
  bool exact = true;
  // H_0 = E/I.
  bool resolves_quotient = true;
  std::vector<HomologyBlock> blocks;
  std::vector<std::string> failures;

  bool ok() const { return d_squared_zero && minimal && homogeneous && exact && resolves_quotient; }
};

struct VerifyLimits {
  std::size_t max_block_dimension = 200000;
};

VerifyReport verify_complex(const FreeComplex& complex, VerifyLimits limits = {});

// d_{i-1}(d_i(f_k)) as a vector of F_{i-2}.
ModuleVector compose_differentials(const FreeComplex& complex, int i, std::size_t k);

// Restriction of d_i to internal degree `degree` as a K-matrix on the
// monomial bases e_mu f_b.
linalg::SparseMatrix graded_piece(const FreeComplex& complex, int i, int degree,
                                  std::size_t max_dimension = 200000);

}  // namespace extres
