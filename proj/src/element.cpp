#include "extres/element.hpp"

#include <sstream>

namespace extres {

Element::Element(const Monomial& m, const Scalar& coefficient, const Field& field)
    : ambient_(m.ambient()) {
  add_term(m.support(), m.sign() * coefficient, field);
}

Scalar Element::coefficient(IndexSet mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = cardinality(terms_.begin()->first);
  for (const auto& [mu, c] : terms_) {
    if (cardinality(mu) != d) return std::nullopt;
  }
  return d;
}

void Element::add_term(IndexSet mu, const Scalar& c, const Field& field) {
  Scalar v = field.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, v);
  if (inserted) return;
  it->second = field.add(it->second, v);
  if (it->second == 0) terms_.erase(it);
}

void Element::add(const Element& other, const Field& field) {
  require_same_ambient(ambient_, other.ambient_);
  for (const auto& [mu, c] : other.terms_) add_term(mu, c, field);
}

void Element::add_scaled(const Element& other, const Scalar& c, const Field& field) {
  require_same_ambient(ambient_, other.ambient_);
  for (const auto& [mu, v] : other.terms_) add_term(mu, c * v, field);
}

Element Element::scaled(const Scalar& c, const Field& field) const {
  Element out(ambient_);
  out.add_scaled(*this, c, field);
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    Scalar abs_c = abs(c);
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    Monomial m(ambient_, mu);
    if (mu == 0) {
      os << abs_c.get_str();
    } else {
      if (abs_c != 1) os << abs_c.get_str() << '*';
      os << m.to_string();
    }
    first = false;
  }
  return os.str();
}

Element multiply(const Element& lhs, const Element& rhs, const Field& field) {
  require_same_ambient(lhs.ambient(), rhs.ambient());
  Element out(lhs.ambient());
  for (const auto& [a, ca] : lhs.terms()) {
    for (const auto& [b, cb] : rhs.terms()) {
      if (a & b) continue;
      out.add_term(a | b, wedge_sign(a, b) * ca * cb, field);
    }
  }
  return out;
}

Element multiply(const Monomial& lhs, const Element& rhs, const Field& field) {
  require_same_ambient(lhs.ambient(), rhs.ambient());
  Element out(lhs.ambient());
  IndexSet a = lhs.support();
  for (const auto& [b, cb] : rhs.terms()) {
    if (a & b) continue;
    out.add_term(a | b, lhs.sign() * wedge_sign(a, b) * cb, field);
  }
  return out;
}

}  // namespace extres
