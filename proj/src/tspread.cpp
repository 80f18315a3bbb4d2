#include "extres/tspread.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "extres/errors.hpp"

namespace extres {

TSpreadVector::TSpreadVector(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) throw InvalidArgument("t must have at least one entry (d >= 2)");
  for (int g : gaps_) {
    if (g < 0) throw InvalidArgument("t entries must be nonnegative");
  }
}

TSpreadVector TSpreadVector::parse(std::string_view text) {
  std::vector<int> gaps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("cannot parse t vector '" + std::string(text) + "'");
    }
    gaps.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return TSpreadVector(std::move(gaps));
}

std::string TSpreadVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t h = 0; h < gaps_.size(); ++h) {
    if (h) os << ',';
    os << gaps_[h];
  }
  os << ')';
  return os.str();
}

bool is_tspread(IndexSet u, const TSpreadVector& t) {
  auto idx = indices_of(u);
  if (static_cast<int>(idx.size()) > t.max_degree()) {
    throw NotTSpread("degree " + std::to_string(idx.size()) + " exceeds d=" +
                     std::to_string(t.max_degree()) + " for t=" + t.to_string());
  }
  for (std::size_t h = 0; h + 1 < idx.size(); ++h) {
    if (idx[h + 1] - idx[h] < t.gaps()[h]) return false;
  }
  return true;
}

bool is_tspread(const Monomial& u, const TSpreadVector& t) { return is_tspread(u.support(), t); }

namespace {

// Every t-spread monomial obtained from mu by one exchange j -> i with i < j.
template <class Visit>
void for_each_exchange(IndexSet mu, int n, const TSpreadVector& t, Visit visit) {
  for (int j : indices_of(mu)) {
    IndexSet rest = mu & ~singleton(j);
    for (int i = 1; i < j && i <= n; ++i) {
      if (rest & singleton(i)) continue;
      IndexSet nu = rest | singleton(i);
      if (is_tspread(nu, t)) visit(nu);
    }
  }
}

}  // namespace

bool is_tspread_strongly_stable(const MonomialIdeal& ideal, const TSpreadVector& t) {
  for (const auto& u : ideal.generators()) {
    if (!is_tspread(u, t)) throw NotTSpread("generator " + u.to_string() + " is not " + t.to_string() + "-spread");
  }
  for (const auto& u : ideal.generators()) {
    bool closed = true;
    for_each_exchange(u.support(), ideal.ambient().n(), t, [&](IndexSet nu) {
      if (!ideal.contains(nu)) closed = false;
    });
    if (!closed) return false;
  }
  return true;
}

MonomialIdeal tspread_closure(Ambient ambient, std::span<const Monomial> seeds, const TSpreadVector& t) {
  std::set<IndexSet> seen;
  std::deque<IndexSet> queue;
  for (const auto& s : seeds) {
    require_same_ambient(ambient, s.ambient());
    if (!is_tspread(s, t)) throw NotTSpread("seed " + s.to_string() + " is not " + t.to_string() + "-spread");
    if (seen.insert(s.support()).second) queue.push_back(s.support());
  }
  while (!queue.empty()) {
    IndexSet mu = queue.front();
    queue.pop_front();
    for_each_exchange(mu, ambient.n(), t, [&](IndexSet nu) {
      if (seen.insert(nu).second) queue.push_back(nu);
    });
  }
  std::vector<Monomial> gens;
  gens.reserve(seen.size());
  for (IndexSet mu : seen) gens.emplace_back(ambient, mu);
  return minimalize(ambient, gens);
}

IndexSet set_e_formula(const Monomial& u, const TSpreadVector& t) {
  auto idx = indices_of(u.support());
  if (static_cast<int>(idx.size()) > t.max_degree()) {
    throw NotTSpread("degree of " + u.to_string() + " exceeds d=" + std::to_string(t.max_degree()));
  }
  IndexSet out = initial_segment(u.max_index());
  for (std::size_t h = 0; h + 1 < idx.size(); ++h) {
    // [j_h + 1, j_h + t_h - 1]; empty when t_h <= 1.
    for (int k = idx[h] + 1; k <= idx[h] + t.gaps()[h] - 1; ++k) out &= ~singleton(k);
  }
  return out;
}

BettiTable betti_tspread(const MonomialIdeal& ideal, const TSpreadVector& t, int i_max) {
  if (!is_tspread_strongly_stable(ideal, t)) {
    throw NotTSpread("ideal is not " + t.to_string() + "-spread strongly stable");
  }
  if (i_max < 0) throw InvalidArgument("i_max must be nonnegative");
  BettiTable table(i_max);
  for (const auto& u : ideal.generators()) {
    int j = u.degree();
    if (j == 0) throw InvalidArgument("the unit ideal has no resolution to tabulate");
    // A gap of 0 constrains nothing beyond strict increase, same as a gap of 1.
    long size = u.max_index();
    for (int h = 1; h < j; ++h) size -= std::max(t.gap(h), 1) - 1;
    for (int i = 0; i <= i_max; ++i) {
      BigInt b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(size + i - 1), static_cast<unsigned long>(i));
      table.add(i, i + j, b);
    }
  }
  return table;
}

LinearQuotientOrder lex_lq_order(const MonomialIdeal& ideal, const TSpreadVector& t, LexDirection direction) {
  if (!is_tspread_strongly_stable(ideal, t)) {
    throw NotTSpread("ideal is not " + t.to_string() + "-spread strongly stable");
  }
  std::vector<Monomial> order = ideal.generators();
  std::stable_sort(order.begin(), order.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return direction == LexDirection::decreasing ? index_lex_less(a.support(), b.support())
                                                 : index_lex_less(b.support(), a.support());
  });
  LqCheck check = check_linear_quotients(ideal, order);
  if (!check) throw Error("lexicographic order has no linear quotients: " + check.describe());
  const LinearQuotientOrder& lq = check.order();
  for (std::size_t k = 0; k < lq.size(); ++k) {
    IndexSet expected = set_e_formula(lq.generator(k), t);
    if (lq.set(k) != expected) {
      throw Error("set(" + lq.generator(k).to_string() + ") differs from the closed formula");
    }
  }
  return lq;
}

}  // namespace extres
