#include "extres/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "extres/errors.hpp"

namespace extres::linalg {

namespace {

struct ModP {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type from(const Scalar& x, const Field& f) const { return f.residue(x); }
  Scalar to_scalar(value_type v) const { return Scalar(v); }
  bool is_zero(value_type v) const { return v == 0; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  value_type one() const { return 1; }
};

struct Rationals {
  using value_type = mpq_class;

  value_type from(const Scalar& x, const Field&) const { return x; }
  Scalar to_scalar(const value_type& v) const { return v; }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type one() const { return 1; }
};

inline constexpr std::size_t kNoPivot = std::numeric_limits<std::size_t>::max();

// Incremental column echelon form. Each stored vector has a distinct leading
// (smallest) row index, normalized to 1. When tracking is on, every stored
// vector remembers which combination of inserted columns it equals.
template <class Arith>
class Echelon {
public:
  using V = typename Arith::value_type;
  using Vec = std::vector<std::pair<std::size_t, V>>;

  Echelon(Arith arith, std::size_t rows, bool track)
      : arith_(std::move(arith)), pivot_(rows, kNoPivot), track_(track) {}

  std::size_t rank() const { return basis_.size(); }

  // Reduces v in place against the basis; combo collects the coefficients
  // (over inserted columns) that were subtracted.
  void reduce(Vec& v, Vec* combo) const {
    while (!v.empty()) {
      std::size_t b = pivot_[v.front().first];
      if (b == kNoPivot) return;
      V factor = v.front().second;
      axpy(v, basis_[b], factor);
      if (combo) axpy_add(*combo, combos_[b], factor);
    }
  }

  // Returns true when the column was independent of the current basis.
  bool insert(Vec v, std::size_t column) {
    Vec combo;
    if (track_) combo.emplace_back(column, arith_.one());
    // combo tracks v = column - sum(...), so subtracted pieces enter negated.
    while (!v.empty()) {
      std::size_t b = pivot_[v.front().first];
      if (b == kNoPivot) break;
      V factor = v.front().second;
      axpy(v, basis_[b], factor);
      if (track_) axpy(combo, combos_[b], factor);
    }
    if (v.empty()) return false;
    V scale = arith_.inv(v.front().second);
    for (auto& [i, x] : v) x = arith_.mul(x, scale);
    if (track_) {
      for (auto& [i, x] : combo) x = arith_.mul(x, scale);
    }
    pivot_[v.front().first] = basis_.size();
    basis_.push_back(std::move(v));
    if (track_) combos_.push_back(std::move(combo));
    return true;
  }

  const Arith& arith() const { return arith_; }

private:
  // v <- v - factor * w
  void axpy(Vec& v, const Vec& w, const V& factor) const {
    Vec out;
    out.reserve(v.size() + w.size());
    auto a = v.begin();
    auto b = w.begin();
    while (a != v.end() || b != w.end()) {
      if (b == w.end() || (a != v.end() && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == v.end() || b->first < a->first) {
        out.emplace_back(b->first, arith_.neg(arith_.mul(factor, b->second)));
        ++b;
      } else {
        V x = arith_.sub(a->second, arith_.mul(factor, b->second));
        if (!arith_.is_zero(x)) out.emplace_back(a->first, std::move(x));
        ++a;
        ++b;
      }
    }
    v = std::move(out);
  }

  // v <- v + factor * w
  void axpy_add(Vec& v, const Vec& w, const V& factor) const {
    axpy(v, w, arith_.neg(factor));
  }

  Arith arith_;
  std::vector<Vec> basis_;
  std::vector<Vec> combos_;
  std::vector<std::size_t> pivot_;
  bool track_;
};

template <class Arith>
typename Echelon<Arith>::Vec convert(const Arith& arith, const SparseVector& v, const Field& field) {
  typename Echelon<Arith>::Vec out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    auto y = arith.from(x, field);
    if (!arith.is_zero(y)) out.emplace_back(i, std::move(y));
  }
  return out;
}

template <class Arith>
std::size_t rank_impl(Arith arith, const SparseMatrix& m, const Field& field) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.columns[a].size() < m.columns[b].size();
  });
  Echelon<Arith> ech(arith, m.rows, false);
  for (std::size_t c : order) {
    ech.insert(convert(arith, m.columns[c], field), c);
    if (ech.rank() == m.rows) break;
  }
  return ech.rank();
}

template <class Arith>
std::vector<SparseVector> solve_impl(Arith arith, const SparseMatrix& m,
                                     const std::vector<SparseVector>& rhs, const Field& field) {
  Echelon<Arith> ech(arith, m.rows, true);
  for (std::size_t c = 0; c < m.cols(); ++c) ech.insert(convert(arith, m.columns[c], field), c);

  std::vector<SparseVector> out;
  out.reserve(rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    auto v = convert(arith, rhs[k], field);
    typename Echelon<Arith>::Vec combo;
    ech.reduce(v, &combo);
    if (!v.empty()) {
      throw InconsistentSystem("right-hand side " + std::to_string(k) +
                               " is not in the image (row " + std::to_string(v.front().first) + ")");
    }
    SparseVector x;
    x.reserve(combo.size());
    for (auto& [i, val] : combo) x.emplace_back(i, field.normalize(arith.to_scalar(val)));
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

void canonicalize(SparseVector& v, const Field& field) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second = field.add(out.back().second, x);
    } else {
      out.emplace_back(i, field.normalize(x));
    }
    if (out.back().second == 0) out.pop_back();
  }
  v = std::move(out);
}

std::size_t rank(const SparseMatrix& m, const Field& field) {
  if (field.is_rational()) return rank_impl(Rationals{}, m, field);
  return rank_impl(ModP{field.characteristic()}, m, field);
}

std::vector<SparseVector> solve(const SparseMatrix& m, const std::vector<SparseVector>& rhs,
                                const Field& field) {
  if (field.is_rational()) return solve_impl(Rationals{}, m, rhs, field);
  return solve_impl(ModP{field.characteristic()}, m, rhs, field);
}

}  // namespace extres::linalg
