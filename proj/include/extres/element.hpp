#pragma once

#include <map>
#include <optional>
#include <string>

#include "extres/exterior.hpp"
#include "extres/field.hpp"

namespace extres {

// A finite K-linear combination of monomials of E. Terms are keyed by index
// set; zero coefficients are never stored.
class Element {
public:
  using Terms = std::map<IndexSet, Scalar>;

  explicit Element(Ambient ambient) : ambient_(ambient) {}
  Element(const Monomial& m, const Scalar& coefficient, const Field& field);

  Ambient ambient() const noexcept { return ambient_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(IndexSet mu) const;
  Scalar constant_term() const { return coefficient(0); }

  // Degree shared by every term, or nullopt for zero/inhomogeneous elements.
  std::optional<int> homogeneous_degree() const;

  void add_term(IndexSet mu, const Scalar& c, const Field& field);
  void add(const Element& other, const Field& field);
  void add_scaled(const Element& other, const Scalar& c, const Field& field);

  Element scaled(const Scalar& c, const Field& field) const;

  std::string to_string() const;

  friend bool operator==(const Element&, const Element&) = default;

private:
  Ambient ambient_;
  Terms terms_;
};

// Products in E; signs follow the sigma convention.
Element multiply(const Element& lhs, const Element& rhs, const Field& field);
Element multiply(const Monomial& lhs, const Element& rhs, const Field& field);

}  // namespace extres
