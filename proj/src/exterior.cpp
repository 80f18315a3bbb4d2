#include "extres/exterior.hpp"

#include <sstream>

#include "extres/errors.hpp"

namespace extres {

AmbientMismatch::AmbientMismatch(int lhs, int rhs)
    : Error("ambient mismatch: n=" + std::to_string(lhs) + " vs n=" + std::to_string(rhs)) {}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

IndexSet checked_insert(IndexSet s, int k) {
  if (k < 1 || k > kMaxVariables) {
    throw InvalidArgument("index " + std::to_string(k) + " outside 1.." +
                          std::to_string(kMaxVariables));
  }
  if (s & singleton(k)) {
    throw InvalidArgument("repeated index " + std::to_string(k));
  }
  return s | singleton(k);
}

}  // namespace

IndexSet make_index_set(std::initializer_list<int> indices) {
  IndexSet s = 0;
  for (int k : indices) s = checked_insert(s, k);
  return s;
}

IndexSet make_index_set(std::span<const int> indices) {
  IndexSet s = 0;
  for (int k : indices) s = checked_insert(s, k);
  return s;
}

std::vector<int> indices_of(IndexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s) {
    int k = std::countr_zero(s);
    out.push_back(k);
    s &= s - 1;
  }
  return out;
}

int sigma(IndexSet tau, IndexSet mu) {
  // For each i in tau count the elements of mu strictly below i.
  int count = 0;
  while (tau) {
    int i = std::countr_zero(tau);
    count += std::popcount(mu & ((IndexSet{1} << i) - 1));
    tau &= tau - 1;
  }
  return count;
}

Ambient::Ambient(int n) : n_(n) {
  if (n < 1 || n > kMaxVariables) {
    throw InvalidArgument("number of variables must lie in 1.." + std::to_string(kMaxVariables) +
                          ", got " + std::to_string(n));
  }
}

void require_same_ambient(Ambient a, Ambient b) {
  if (a != b) throw AmbientMismatch(a.n(), b.n());
}

Monomial::Monomial(Ambient ambient, IndexSet indices, int sign)
    : ambient_(ambient), indices_(indices), sign_(sign) {
  if (!ambient.contains(indices)) {
    throw InvalidArgument("monomial index exceeds n=" + std::to_string(ambient.n()));
  }
  if (sign != 1 && sign != -1) throw InvalidArgument("monomial sign must be +1 or -1");
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  if (sign_ < 0) os << '-';
  if (indices_ == 0) {
    os << '1';
    return os.str();
  }
  bool first = true;
  for (int k : indices_of(indices_)) {
    if (!first) os << '*';
    os << 'e' << k;
    first = false;
  }
  return os.str();
}

std::optional<Monomial> wedge(const Monomial& u, const Monomial& v) {
  require_same_ambient(u.ambient(), v.ambient());
  if (u.support() & v.support()) return std::nullopt;
  int sign = u.sign() * v.sign() * wedge_sign(u.support(), v.support());
  return Monomial(u.ambient(), u.support() | v.support(), sign);
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  require_same_ambient(u.ambient(), v.ambient());
  if (!is_subset(v.support(), u.support())) {
    throw NotDivisible(v.to_string() + " does not divide " + u.to_string());
  }
  IndexSet rest = u.support() & ~v.support();
  // w ∧ v = s_w s_v (-1)^sigma(rest, supp v) e_u must equal s_u e_u.
  int sign = u.sign() * v.sign() * wedge_sign(rest, v.support());
  return Monomial(u.ambient(), rest, sign);
}

}  // namespace extres
