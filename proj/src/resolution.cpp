#include "extres/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "extres/errors.hpp"

namespace extres {

namespace {

int parity_sign(int d) { return (d & 1) ? -1 : 1; }

// All subsets of {1..n} with d elements, ascending as integers.
std::vector<IndexSet> subsets_of_size(int n, int d) {
  std::vector<IndexSet> out;
  if (d < 0 || d > n) return out;
  if (d == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack on bits 0..n-1, shifted so that bit k means e_k.
  std::uint64_t v = (std::uint64_t{1} << d) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    out.push_back(v << 1);
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    if (r == 0) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

double binomial_estimate(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// K-basis {e_mu f_k : |mu| = degree - deg f_k} of F_i in one internal degree.
class GradedBasis {
public:
  GradedBasis(const FreeComplex& complex, int i, int degree, std::size_t max_dimension) {
    int n = complex.ambient().n();
    std::size_t rank = complex.rank(i);
    double estimate = 0;
    for (std::size_t k = 0; k < rank; ++k) estimate += binomial_estimate(n, degree - complex.degree(i, k));
    if (estimate > static_cast<double>(max_dimension)) {
      throw ResourceLimit("graded piece of F_" + std::to_string(i) + " in degree " + std::to_string(degree) +
                          " has dimension about " + std::to_string(static_cast<long long>(estimate)));
    }
    std::map<int, std::vector<IndexSet>> by_size;
    for (std::size_t k = 0; k < rank; ++k) {
      int d = degree - complex.degree(i, k);
      if (d < 0 || d > n) continue;
      auto it = by_size.find(d);
      if (it == by_size.end()) it = by_size.emplace(d, subsets_of_size(n, d)).first;
      for (IndexSet mu : it->second) {
        index_.emplace(std::make_pair(k, mu), entries_.size());
        entries_.emplace_back(k, mu);
      }
    }
  }

  std::size_t size() const { return entries_.size(); }
  const std::pair<std::size_t, IndexSet>& at(std::size_t idx) const { return entries_[idx]; }
  std::optional<std::size_t> index(std::size_t k, IndexSet mu) const {
    auto it = index_.find({k, mu});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  linalg::SparseVector expand(const ModuleVector& v, const Field& field) const {
    linalg::SparseVector out;
    for (const auto& [k, elem] : v) {
      for (const auto& [mu, c] : elem.terms()) {
        auto idx = index(k, mu);
        if (!idx) throw Error("internal: inhomogeneous vector in graded expansion");
        out.emplace_back(*idx, c);
      }
    }
    linalg::canonicalize(out, field);
    return out;
  }

  ModuleVector collect(const linalg::SparseVector& x, Ambient ambient, const Field& field) const {
    ModuleVector out;
    for (const auto& [idx, c] : x) {
      const auto& [k, mu] = entries_[idx];
      auto it = out.try_emplace(k, ambient).first;
      it->second.add_term(mu, c, field);
      if (it->second.is_zero()) out.erase(it);
    }
    return out;
  }

private:
  std::vector<std::pair<std::size_t, IndexSet>> entries_;
  std::map<std::pair<std::size_t, IndexSet>, std::size_t> index_;
};

void add_into(ModuleVector& acc, std::size_t k, const Element& e, const Field& field) {
  if (e.is_zero()) return;
  auto it = acc.try_emplace(k, e.ambient()).first;
  it->second.add(e, field);
  if (it->second.is_zero()) acc.erase(it);
}

ModuleVector left_multiply(const Element& c, const ModuleVector& v, const Field& field) {
  ModuleVector out;
  for (const auto& [k, e] : v) add_into(out, k, multiply(c, e, field), field);
  return out;
}

ModuleVector left_multiply(const Monomial& m, const ModuleVector& v, const Field& field) {
  ModuleVector out;
  for (const auto& [k, e] : v) add_into(out, k, multiply(m, e, field), field);
  return out;
}

void add_vector(ModuleVector& acc, const ModuleVector& v, const Field& field) {
  for (const auto& [k, e] : v) add_into(acc, k, e, field);
}

int max_degree(const FreeComplex& complex, int i) {
  int d = 0;
  for (std::size_t k = 0; k < complex.rank(i); ++k) d = std::max(d, complex.degree(i, k));
  return d;
}

int min_degree(const FreeComplex& complex, int i) {
  int d = std::numeric_limits<int>::max();
  for (std::size_t k = 0; k < complex.rank(i); ++k) d = std::min(d, complex.degree(i, k));
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Symbols and the complex container

std::vector<ResolutionSymbol> basis(const LinearQuotientOrder& lq, int i) {
  if (i < 1) throw InvalidArgument("resolution symbols exist for i >= 1");
  lq.require_degree_increasing();
  std::vector<ResolutionSymbol> out;
  for (std::size_t k = 0; k < lq.size(); ++k) {
    int deg_u = lq.generator(k).degree();
    for (auto& a : compositions(lq.ambient(), lq.set(k), i - 1)) {
      out.push_back({std::move(a), k, i - 1 + deg_u});
    }
  }
  return out;
}

std::optional<ResolutionSymbol> make_symbol(const LinearQuotientOrder& lq, const Multidegree& a,
                                            std::size_t generator) {
  if (!is_subset(a.support(), lq.set(generator))) return std::nullopt;
  return ResolutionSymbol{a, generator, a.total() + lq.generator(generator).degree()};
}

FreeComplex::FreeComplex(LinearQuotientOrder lq, Field field, int i_max)
    : lq_(std::move(lq)), field_(field), i_max_(i_max) {
  if (i_max < 1) throw InvalidArgument("truncation bound must be at least 1");
  lq_.require_degree_increasing();
  symbols_.resize(static_cast<std::size_t>(i_max) + 1);
  images_.resize(static_cast<std::size_t>(i_max) + 1);
  lookup_.resize(static_cast<std::size_t>(i_max) + 1);
}

std::size_t FreeComplex::rank(int i) const {
  if (i == 0) return 1;
  if (i < 0 || i > i_max_) return 0;
  return symbols_[static_cast<std::size_t>(i)].size();
}

int FreeComplex::degree(int i, std::size_t k) const {
  if (i == 0) return 0;
  return symbols_.at(static_cast<std::size_t>(i)).at(k).degree;
}

const std::vector<ResolutionSymbol>& FreeComplex::symbols(int i) const {
  if (i < 1 || i > i_max_) throw InvalidArgument("no symbols at level " + std::to_string(i));
  return symbols_[static_cast<std::size_t>(i)];
}

std::optional<std::size_t> FreeComplex::find(int i, const Multidegree& a, std::size_t generator) const {
  if (i < 1 || i > i_max_) return std::nullopt;
  const auto& table = lookup_[static_cast<std::size_t>(i)];
  auto it = table.find({generator, a});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const ModuleVector& FreeComplex::image(int i, std::size_t k) const {
  if (i < 1 || i > i_max_) throw InvalidArgument("no differential at level " + std::to_string(i));
  return images_[static_cast<std::size_t>(i)].at(k);
}

ModuleVector& FreeComplex::mutable_image(int i, std::size_t k) {
  if (i < 1 || i > i_max_) throw InvalidArgument("no differential at level " + std::to_string(i));
  return images_[static_cast<std::size_t>(i)].at(k);
}

std::size_t FreeComplex::append(int i, ResolutionSymbol symbol, ModuleVector image) {
  if (i < 1 || i > i_max_) throw InvalidArgument("level " + std::to_string(i) + " outside the truncation");
  auto level = static_cast<std::size_t>(i);
  std::size_t k = symbols_[level].size();
  lookup_[level].emplace(std::make_pair(symbol.generator, symbol.a), k);
  symbols_[level].push_back(std::move(symbol));
  images_[level].push_back(std::move(image));
  return k;
}

// ---------------------------------------------------------------------------
// Decomposition function

std::size_t DecompositionFunction::g_index(IndexSet u) const {
  for (std::size_t j = 0; j < lq_.size(); ++j) {
    if (is_subset(lq_.generator(j).support(), u)) return j;
  }
  throw NotInIdeal("monomial " + Monomial(lq_.ambient(), u).to_string() + " is not in the ideal");
}

DecompositionFunction::Decomposition DecompositionFunction::decompose(const Monomial& u) const {
  require_same_ambient(lq_.ambient(), u.ambient());
  std::size_t j = g_index(u.support());
  const Monomial& g = lq_.generator(j);
  IndexSet rest = u.support() & ~g.support();
  int sign = u.sign() * wedge_sign(g.support(), rest);
  return {j, g, Monomial(u.ambient(), rest, sign)};
}

std::optional<DecompositionFunction::Witness> DecompositionFunction::regularity_violation() const {
  for (std::size_t k = 0; k < lq_.size(); ++k) {
    IndexSet supp = lq_.generator(k).support();
    for (int s : indices_of(lq_.set(k) & ~supp)) {
      std::size_t j = g_index(supp | singleton(s));
      if (!is_subset(lq_.set(j), lq_.set(k))) return Witness{k, s, j};
    }
  }
  return std::nullopt;
}

namespace {

struct RegularSearch {
  const MonomialIdeal& ideal;
  std::size_t max_nodes;
  std::size_t nodes = 0;
  std::vector<Monomial> prefix;
  std::vector<IndexSet> sets;
  std::vector<bool> used;

  bool extend() {
    const auto& gens = ideal.generators();
    if (prefix.size() == gens.size()) return true;
    int degree = std::numeric_limits<int>::max();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!used[k]) degree = std::min(degree, gens[k].degree());
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (used[k] || gens[k].degree() != degree) continue;
      if (++nodes > max_nodes) throw ResourceLimit("regular order search exceeded " + std::to_string(max_nodes) + " nodes");
      const Monomial& u = gens[k];
      MonomialIdeal q = colon(ideal_of(ideal.ambient(), prefix), u);
      IndexSet set = 0;
      bool linear = true;
      for (const auto& v : q.generators()) {
        if (v.degree() != 1) linear = false;
        set |= v.support();
      }
      if (!linear || !regular_at(u, set)) continue;
      prefix.push_back(u);
      sets.push_back(set);
      used[k] = true;
      if (extend()) return true;
      prefix.pop_back();
      sets.pop_back();
      used[k] = false;
    }
    return false;
  }

  bool regular_at(const Monomial& u, IndexSet set) const {
    for (int s : indices_of(set & ~u.support())) {
      IndexSet w = u.support() | singleton(s);
      for (std::size_t j = 0; j < prefix.size(); ++j) {
        if (!is_subset(prefix[j].support(), w)) continue;
        if (!is_subset(sets[j], set)) return false;
        break;
      }
    }
    return true;
  }
};

}  // namespace

std::optional<LinearQuotientOrder> find_regular_lq_order(const MonomialIdeal& ideal, std::size_t max_nodes) {
  if (ideal.is_zero()) throw ZeroIdeal("the zero ideal has no generators to order");
  RegularSearch search{ideal, max_nodes, 0, {}, {}, std::vector<bool>(ideal.size(), false)};
  if (!search.extend()) return std::nullopt;
  auto check = check_linear_quotients(ideal, search.prefix);
  if (!check) throw Error("internal: regular order search produced a non-LQ order");
  return check.order();
}

// ---------------------------------------------------------------------------
// Explicit differentials

std::vector<ModuleVector> differential_regular(const DecompositionFunction& df, int i, const Field& field) {
  if (auto w = df.regularity_violation()) {
    const auto& lq = df.lq();
    throw NotRegular("decomposition function is not regular: u=" + lq.generator(w->generator).to_string() +
                     ", s=" + std::to_string(w->s));
  }
  const auto& lq = df.lq();
  Ambient amb = lq.ambient();
  auto symbols = basis(lq, i);
  std::vector<ModuleVector> out;
  out.reserve(symbols.size());
  if (i == 1) {
    for (const auto& f : symbols) {
      const Monomial& u = lq.generator(f.generator);
      ModuleVector v;
      add_into(v, 0, Element(u, parity_sign(u.degree()), field), field);
      out.push_back(std::move(v));
    }
    return out;
  }

  std::map<std::pair<std::size_t, Multidegree>, std::size_t> lower;
  {
    auto below = basis(lq, i - 1);
    for (std::size_t k = 0; k < below.size(); ++k) lower.emplace(std::make_pair(below[k].generator, below[k].a), k);
  }
  auto index_below = [&](std::size_t generator, const Multidegree& a) -> std::optional<std::size_t> {
    auto it = lower.find({generator, a});
    if (it == lower.end()) return std::nullopt;
    return it->second;
  };

  for (const auto& f : symbols) {
    const Monomial& u = lq.generator(f.generator);
    int su = parity_sign(u.degree());
    ModuleVector v;
    for (int t : indices_of(f.a.support())) {
      Multidegree lowered = f.a.minus_unit(t);
      // -(-1)^deg(u) e_t f(a - eps_t; u)
      add_into(v, index_below(f.generator, lowered).value(),
               Element(Monomial::variable(amb, t), Scalar(-su), field), field);
      if (u.support() & singleton(t)) continue;
      // (-1)^deg(g) (e_t u / g) f(a - eps_t; g) with g = g(e_t u)
      Monomial etu = *wedge(Monomial::variable(amb, t), u);
      std::size_t gj = df.g_index(etu.support());
      auto target = index_below(gj, lowered);
      if (!target) continue;  // supp(a - eps_t) not inside set(g)
      const Monomial& g = lq.generator(gj);
      add_into(v, *target, Element(quotient(etu, g), Scalar(parity_sign(g.degree())), field), field);
    }
    out.push_back(std::move(v));
  }
  return out;
}

FreeComplex resolve_regular(const DecompositionFunction& df, int i_max, const Field& field) {
  FreeComplex complex(df.lq(), field, i_max);
  for (int i = 1; i <= i_max; ++i) {
    auto symbols = basis(df.lq(), i);
    auto images = differential_regular(df, i, field);
    for (std::size_t k = 0; k < symbols.size(); ++k) complex.append(i, std::move(symbols[k]), std::move(images[k]));
  }
  return complex;
}

// ---------------------------------------------------------------------------
// Mapping cones

linalg::SparseMatrix graded_piece(const FreeComplex& complex, int i, int degree, std::size_t max_dimension) {
  GradedBasis domain(complex, i, degree, max_dimension);
  GradedBasis codomain(complex, i - 1, degree, max_dimension);
  const Field& field = complex.field();
  Ambient amb = complex.ambient();
  linalg::SparseMatrix m;
  m.rows = codomain.size();
  m.columns.reserve(domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const auto& [k, mu] = domain.at(c);
    m.columns.push_back(codomain.expand(left_multiply(Monomial(amb, mu), complex.image(i, k), field), field));
  }
  return m;
}

FreeComplex lift_mapping_cone(const LinearQuotientOrder& lq, int i_max, const Field& field) {
  FreeComplex complex(lq, field, i_max);
  Ambient amb = lq.ambient();
  constexpr std::size_t kMaxDimension = 200000;

  for (std::size_t j = 0; j < lq.size(); ++j) {
    const Monomial& u = lq.generator(j);
    const Scalar s = parity_sign(u.degree());

    // Cartan complex on set(u): basis of C_k for 0 <= k < i_max.
    std::vector<std::vector<Multidegree>> cartan(static_cast<std::size_t>(i_max));
    std::vector<std::map<Multidegree, std::size_t>> cartan_pos(static_cast<std::size_t>(i_max));
    for (int k = 0; k < i_max; ++k) {
      cartan[static_cast<std::size_t>(k)] = compositions(amb, lq.set(j), k);
      for (std::size_t p = 0; p < cartan[static_cast<std::size_t>(k)].size(); ++p) {
        cartan_pos[static_cast<std::size_t>(k)].emplace(cartan[static_cast<std::size_t>(k)][p], p);
      }
    }

    // Comparison maps psi_k: C_k -> F_k of the complex resolving E/(u_1..u_{j}).
    std::vector<std::vector<ModuleVector>> psi(static_cast<std::size_t>(i_max));
    {
      ModuleVector v;
      add_into(v, 0, Element(u, s, field), field);
      psi[0].push_back(std::move(v));
    }
    for (int k = 1; k < i_max; ++k) {
      const auto& chains = cartan[static_cast<std::size_t>(k)];
      std::vector<ModuleVector> targets;
      targets.reserve(chains.size());
      for (const auto& a : chains) {
        // psi_{k-1}(d x^(a)) with d x^(a) = s * sum_t e_t x^(a - eps_t).
        ModuleVector z;
        for (int t : indices_of(a.support())) {
          std::size_t p = cartan_pos[static_cast<std::size_t>(k - 1)].at(a.minus_unit(t));
          Element coeff(Monomial::variable(amb, t), s, field);
          add_vector(z, left_multiply(coeff, psi[static_cast<std::size_t>(k - 1)][p], field), field);
        }
        targets.push_back(std::move(z));
      }

      auto& level = psi[static_cast<std::size_t>(k)];
      if (complex.rank(k) == 0) {
        for (const auto& z : targets) {
          if (!z.empty()) throw InconsistentSystem("comparison map has no room in F_" + std::to_string(k));
        }
        level.assign(chains.size(), ModuleVector{});
        continue;
      }
      int degree = k + u.degree();
      GradedBasis domain(complex, k, degree, kMaxDimension);
      GradedBasis codomain(complex, k - 1, degree, kMaxDimension);
      std::vector<linalg::SparseVector> rhs;
      rhs.reserve(targets.size());
      for (const auto& z : targets) rhs.push_back(codomain.expand(z, field));
      auto solutions = linalg::solve(graded_piece(complex, k, degree, kMaxDimension), rhs, field);
      level.reserve(solutions.size());
      for (const auto& x : solutions) level.push_back(domain.collect(x, amb, field));
    }

    // Cone: new symbols f(a; u) at level k + 1 with
    // d f(a; u) = -s sum_t e_t f(a - eps_t; u) + psi_k(x^(a)).
    for (int k = 0; k < i_max; ++k) {
      const auto& chains = cartan[static_cast<std::size_t>(k)];
      for (std::size_t p = 0; p < chains.size(); ++p) {
        const auto& a = chains[p];
        ModuleVector image = psi[static_cast<std::size_t>(k)][p];
        for (int t : indices_of(a.support())) {
          auto target = complex.find(k, a.minus_unit(t), j);
          if (!target) throw Error("internal: missing cone symbol");
          add_into(image, *target, Element(Monomial::variable(amb, t), -s, field), field);
        }
        complex.append(k + 1, ResolutionSymbol{a, j, k + u.degree()}, std::move(image));
      }
    }
  }
  return complex;
}

// ---------------------------------------------------------------------------
// Verification

ModuleVector compose_differentials(const FreeComplex& complex, int i, std::size_t k) {
  if (i < 2) throw InvalidArgument("d o d needs i >= 2");
  const Field& field = complex.field();
  ModuleVector out;
  for (const auto& [b, c] : complex.image(i, k)) {
    add_vector(out, left_multiply(c, complex.image(i - 1, b), field), field);
  }
  return out;
}

VerifyReport verify_complex(const FreeComplex& complex, VerifyLimits limits) {
  VerifyReport report;
  const Field& field = complex.field();
  const MonomialIdeal& ideal = complex.lq().ideal();
  int n = complex.ambient().n();
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    report.failures.push_back(msg);
  };

  for (int i = 1; i <= complex.i_max(); ++i) {
    for (std::size_t k = 0; k < complex.rank(i); ++k) {
      for (const auto& [b, c] : complex.image(i, k)) {
        if (c.constant_term() != 0) {
          std::ostringstream os;
          os << "entry (" << b << ',' << k << ") of d_" << i << " has a unit coefficient";
          fail(report.minimal, os.str());
        }
        auto d = c.homogeneous_degree();
        if (!d || *d != complex.degree(i, k) - complex.degree(i - 1, b)) {
          std::ostringstream os;
          os << "entry (" << b << ',' << k << ") of d_" << i << " is not homogeneous of the right degree";
          fail(report.homogeneous, os.str());
        }
      }
      if (i >= 2 && !compose_differentials(complex, i, k).empty()) {
        std::ostringstream os;
        os << "d_" << i - 1 << " o d_" << i << " is nonzero on basis element " << k;
        fail(report.d_squared_zero, os.str());
      }
    }
  }

  // Graded pieces only exist for a homogeneous complex.
  if (!report.homogeneous) {
    report.exact = false;
    report.resolves_quotient = false;
    report.failures.push_back("homology not computed: the complex is not homogeneous");
    return report;
  }

  // Ranks per internal degree; the window stops one below the truncation.
  std::map<std::pair<int, int>, std::size_t> ranks;
  auto rank_of = [&](int i, int degree) -> std::size_t {
    if (i < 1 || i > complex.i_max()) return 0;
    auto key = std::make_pair(i, degree);
    if (auto it = ranks.find(key); it != ranks.end()) return it->second;
    std::size_t r = linalg::rank(graded_piece(complex, i, degree, limits.max_block_dimension), field);
    ranks.emplace(key, r);
    return r;
  };

  for (int degree = 0; degree <= n; ++degree) {
    std::size_t in_ideal = 0;
    for (IndexSet mu : subsets_of_size(n, degree)) in_ideal += ideal.contains(mu) ? 1 : 0;
    if (rank_of(1, degree) != in_ideal) {
      fail(report.resolves_quotient, "image of d_1 differs from I in degree " + std::to_string(degree));
    }
  }

  for (int i = 1; i + 1 <= complex.i_max(); ++i) {
    if (complex.rank(i) == 0) continue;
    for (int degree = min_degree(complex, i); degree <= max_degree(complex, i) + n; ++degree) {
      std::size_t dim = GradedBasis(complex, i, degree, limits.max_block_dimension).size();
      if (dim == 0) continue;
      std::size_t h = dim - rank_of(i, degree) - rank_of(i + 1, degree);
      report.blocks.push_back({i, degree, dim, h});
      if (h != 0) {
        fail(report.exact, "H_" + std::to_string(i) + " has dimension " + std::to_string(h) + " in degree " +
                               std::to_string(degree));
      }
    }
  }
  return report;
}

}  // namespace extres
