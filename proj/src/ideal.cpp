#include "extres/ideal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

#include "extres/errors.hpp"

namespace extres {

bool index_lex_less(IndexSet a, IndexSet b) {
  IndexSet diff = a ^ b;
  if (diff == 0) return false;
  int k = std::countr_zero(diff);
  if (a & singleton(k)) return true;
  // b has k; a is smaller only if it stops before k (a proper prefix).
  return (a >> k) == 0;
}

bool degree_lex_less(IndexSet a, IndexSet b) {
  int da = cardinality(a), db = cardinality(b);
  if (da != db) return da < db;
  return index_lex_less(a, b);
}

MonomialIdeal minimalize(Ambient ambient, std::span<const Monomial> gens) {
  std::vector<IndexSet> sets;
  sets.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_ambient(ambient, g.ambient());
    sets.push_back(g.support());
  }
  std::sort(sets.begin(), sets.end(), degree_lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  MonomialIdeal out(ambient);
  for (IndexSet s : sets) {
    // Earlier entries have degree <= deg s, so only they can divide s.
    bool redundant = std::any_of(out.generators_.begin(), out.generators_.end(),
                                 [&](const Monomial& g) { return is_subset(g.support(), s); });
    if (!redundant) out.generators_.emplace_back(ambient, s);
  }
  return out;
}

MonomialIdeal make_ideal(Ambient ambient, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Monomial> monos;
  for (auto g : gens) monos.push_back(Monomial::of(ambient, g));
  return minimalize(ambient, monos);
}

MonomialIdeal ideal_of(Ambient ambient, std::span<const Monomial> gens) {
  return minimalize(ambient, gens);
}

std::vector<Monomial> MonomialIdeal::generators_of_degree(int j) const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) {
    if (g.degree() == j) out.push_back(g);
  }
  return out;
}

bool MonomialIdeal::contains(IndexSet mu) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return is_subset(g.support(), mu); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  require_same_ambient(ambient_, u.ambient());
  return contains(u.support());
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) os << ", ";
    os << generators_[k].to_string();
  }
  os << ')';
  return os.str();
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  require_same_ambient(ideal.ambient(), u.ambient());
  if (u.is_unit()) throw UnitColon();
  Ambient amb = ideal.ambient();
  std::vector<Monomial> gens;
  for (int k : indices_of(u.support())) gens.push_back(Monomial::variable(amb, k));
  for (const auto& v : ideal.generators()) {
    gens.emplace_back(amb, v.support() & ~u.support());
  }
  return minimalize(amb, gens);
}

std::optional<std::size_t> LinearQuotientOrder::position(IndexSet support) const {
  for (std::size_t j = 0; j < order_.size(); ++j) {
    if (order_[j].support() == support) return j;
  }
  return std::nullopt;
}

std::string LqCheck::describe() const {
  if (ok()) return "linear quotients";
  std::ostringstream os;
  os << "fails at position " << position_ << ": ";
  os << "colon ideal has non-linear generator " << obstruction_->to_string();
  return os.str();
}

LqCheck LqCheck::run(const MonomialIdeal& ideal, std::span<const Monomial> order) {
  Ambient amb = ideal.ambient();
  if (order.size() != ideal.size()) {
    throw InvalidArgument("order has " + std::to_string(order.size()) + " entries, ideal has " +
                          std::to_string(ideal.size()) + " generators");
  }
  std::vector<Monomial> seq;
  seq.reserve(order.size());
  for (const auto& u : order) {
    require_same_ambient(amb, u.ambient());
    bool known = std::any_of(ideal.generators().begin(), ideal.generators().end(),
                             [&](const Monomial& g) { return g.support() == u.support(); });
    bool repeated = std::any_of(seq.begin(), seq.end(),
                                [&](const Monomial& g) { return g.support() == u.support(); });
    if (!known || repeated) {
      throw InvalidArgument("order is not a permutation of G(I): " + u.to_string());
    }
    seq.push_back(u.unsigned_copy());
  }

  LqCheck result;
  std::vector<IndexSet> sets;
  sets.reserve(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (j == 0) {
      sets.push_back(seq[0].support());
      continue;
    }
    MonomialIdeal q = colon(ideal_of(amb, std::span(seq).first(j)), seq[j]);
    IndexSet set = 0;
    for (const auto& g : q.generators()) {
      if (g.degree() != 1) {
        result.failure_ = Failure::nonlinear_colon;
        result.position_ = j + 1;
        result.obstruction_ = g;
        return result;
      }
      set |= g.support();
    }
    sets.push_back(set);
  }
  result.order_ = LinearQuotientOrder(ideal, std::move(seq), std::move(sets));
  return result;
}

bool LinearQuotientOrder::degree_increasing() const {
  for (std::size_t j = 1; j < order_.size(); ++j) {
    if (order_[j].degree() < order_[j - 1].degree()) return false;
  }
  return true;
}

void LinearQuotientOrder::require_degree_increasing() const {
  if (!degree_increasing()) {
    throw InvalidArgument("linear quotient order is not degree increasing; find_lq_order gives one that is");
  }
}

LqCheck check_linear_quotients(const MonomialIdeal& ideal, std::span<const Monomial> order) {
  return LqCheck::run(ideal, order);
}

LqCheck check_linear_quotients(const MonomialIdeal& ideal, std::span<const std::size_t> permutation) {
  std::vector<Monomial> order;
  order.reserve(permutation.size());
  for (std::size_t k : permutation) {
    if (k >= ideal.size()) throw InvalidArgument("order index " + std::to_string(k) + " out of range");
    order.push_back(ideal.generators()[k]);
  }
  return LqCheck::run(ideal, order);
}

namespace {

bool colon_is_linear(IndexSet u, std::span<const IndexSet> prefix) {
  // Every v \ u must either be a single variable or contain one of the
  // single-variable differences; variables of supp(u) never help since
  // v \ u avoids supp(u).
  IndexSet singles = 0;
  for (IndexSet v : prefix) {
    IndexSet w = v & ~u;
    if (cardinality(w) == 1) singles |= w;
  }
  return std::all_of(prefix.begin(), prefix.end(), [&](IndexSet v) {
    IndexSet w = v & ~u;
    return cardinality(w) == 1 || (w & singles) != 0;
  });
}

struct Search {
  std::vector<IndexSet> gens;  // canonical order of G(I)
  std::vector<bool> used;
  std::vector<IndexSet> prefix;
  std::vector<std::size_t> chosen;
  std::unordered_set<std::vector<bool>> dead;
  LqSearchStats stats;

  // Number of degree-increasing completions of the current prefix.
  std::uint64_t completions() const {
    std::map<int, int> remaining;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!used[k]) ++remaining[cardinality(gens[k])];
    }
    std::uint64_t total = 1;
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [deg, count] : remaining) {
      for (int f = 2; f <= count; ++f) {
        total = total > cap / static_cast<std::uint64_t>(f) ? cap : total * f;
      }
    }
    return total;
  }

  void rule_out(std::uint64_t orders) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    stats.orders_ruled_out = stats.orders_ruled_out > cap - orders ? cap : stats.orders_ruled_out + orders;
  }

  bool extend() {
    if (prefix.size() == gens.size()) return true;
    if (dead.count(used)) {
      ++stats.dead_ends;
      rule_out(completions());
      return false;
    }
    int next_degree = std::numeric_limits<int>::max();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!used[k]) next_degree = std::min(next_degree, cardinality(gens[k]));
    }
    // gens are degree-lex sorted, so this walks candidates in lex order.
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (used[k] || cardinality(gens[k]) != next_degree) continue;
      ++stats.colon_checks;
      if (!prefix.empty() && !colon_is_linear(gens[k], prefix)) {
        ++stats.dead_ends;
        used[k] = true;
        rule_out(completions());
        used[k] = false;
        continue;
      }
      used[k] = true;
      prefix.push_back(gens[k]);
      chosen.push_back(k);
      if (extend()) return true;
      used[k] = false;
      prefix.pop_back();
      chosen.pop_back();
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

std::optional<LinearQuotientOrder> find_lq_order(const MonomialIdeal& ideal, LqSearchStats* stats) {
  Search search;
  for (const auto& g : ideal.generators()) search.gens.push_back(g.support());
  search.used.assign(search.gens.size(), false);
  bool found = search.extend();
  if (stats) *stats = search.stats;
  if (!found) return std::nullopt;
  LqCheck check = check_linear_quotients(ideal, std::span<const std::size_t>(search.chosen));
  if (!check) throw Error("internal: search produced an order that fails verification");
  return check.order();
}

std::vector<Monomial> reverse_deglex_order(const MonomialIdeal& ideal) {
  std::vector<Monomial> order = ideal.generators();
  // For equal degrees, comparing the words as integers compares the largest
  // differing index first.
  std::sort(order.begin(), order.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.support() < b.support();
  });
  return order;
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.generators()) {
    int m = u.max_index();
    if (m == 0) continue;
    IndexSet rest = u.support() & ~singleton(m);
    for (int j = 1; j < m; ++j) {
      if (rest & singleton(j)) continue;  // product vanishes
      if (!ideal.contains(rest | singleton(j))) return false;
    }
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.generators()) {
    for (int j : indices_of(u.support())) {
      IndexSet rest = u.support() & ~singleton(j);
      for (int i = 1; i < j; ++i) {
        if (rest & singleton(i)) continue;
        if (!ideal.contains(rest | singleton(i))) return false;
      }
    }
  }
  return true;
}

}  // namespace extres
