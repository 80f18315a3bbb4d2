#include "oracles.hpp"

#include <algorithm>
#include <deque>

namespace oracle {

int concat_sign(const std::vector<int>& tau, const std::vector<int>& mu) {
  std::vector<int> v = tau;
  v.insert(v.end(), mu.begin(), mu.end());
  int swaps = 0;
  for (std::size_t pass = 0; pass < v.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (v[k] == v[k + 1]) return 0;
      if (v[k] > v[k + 1]) {
        std::swap(v[k], v[k + 1]);
        ++swaps;
      }
    }
  }
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k] == v[k + 1]) return 0;
  }
  return swaps % 2 ? -1 : 1;
}

std::vector<IndexSet> all_monomials(int n) {
  std::vector<IndexSet> out;
  for (IndexSet s = 0; s < (IndexSet{1} << n); ++s) out.push_back(s << 1);
  return out;
}

bool in_ideal(const std::vector<IndexSet>& gens, IndexSet w) {
  for (IndexSet g : gens) {
    if ((g & w) == g) return true;
  }
  return false;
}

std::set<IndexSet> colon_set(int n, const std::vector<IndexSet>& gens, IndexSet u) {
  std::set<IndexSet> out;
  for (IndexSet w : all_monomials(n)) {
    if ((w & u) != 0 || in_ideal(gens, w | u)) out.insert(w);
  }
  return out;
}

std::set<IndexSet> ideal_set(int n, const std::vector<IndexSet>& gens) {
  std::set<IndexSet> out;
  for (IndexSet w : all_monomials(n)) {
    if (in_ideal(gens, w)) out.insert(w);
  }
  return out;
}

std::vector<IndexSet> minimal_elements(const std::set<IndexSet>& s) {
  std::vector<IndexSet> out;
  for (IndexSet a : s) {
    bool minimal = true;
    for (IndexSet b : s) {
      if (b != a && (b & a) == b) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::uint64_t count_compositions(int total, int parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  if (parts == 1) return 1;
  std::uint64_t c = 0;
  for (int first = 0; first <= total; ++first) c += count_compositions(total - first, parts - 1);
  return c;
}

namespace {

bool spread_ok(IndexSet s, int gap) {
  if (gap <= 0) return true;
  int prev = -1000;
  for (int k = 1; k < 64; ++k) {
    if (!(s >> k & 1)) continue;
    if (k - prev < gap) return false;
    prev = k;
  }
  return true;
}

int top(IndexSet s) {
  for (int k = 63; k >= 1; --k) {
    if (s >> k & 1) return k;
  }
  return 0;
}

}  // namespace

std::vector<IndexSet> borel_closure(int n, const std::vector<IndexSet>& seeds, bool move_max_only, int gap) {
  std::set<IndexSet> seen(seeds.begin(), seeds.end());
  std::deque<IndexSet> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    IndexSet u = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      if (!(u >> i & 1)) continue;
      if (move_max_only && i != top(u)) continue;
      for (int j = 1; j < i; ++j) {
        if (u >> j & 1) continue;
        IndexSet v = (u & ~(IndexSet{1} << i)) | (IndexSet{1} << j);
        if (!spread_ok(v, gap)) continue;
        if (seen.insert(v).second) queue.push_back(v);
      }
    }
  }
  return minimal_elements(seen);
}

std::vector<IndexSet> random_seeds(std::mt19937& rng, int n, int count, int min_degree, int max_degree, int gap) {
  std::vector<IndexSet> out;
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  std::uniform_int_distribution<int> var(1, n);
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts++ < 1000) {
    int d = std::min(deg(rng), n);
    IndexSet s = 0;
    while (__builtin_popcountll(s) < d) s |= IndexSet{1} << var(rng);
    if (spread_ok(s, gap)) out.push_back(s);
  }
  return out;
}

extres::MonomialIdeal to_ideal(int n, const std::vector<IndexSet>& gens) {
  extres::Ambient amb(n);
  std::vector<extres::Monomial> ms;
  for (IndexSet g : gens) ms.emplace_back(amb, g);
  return extres::minimalize(amb, ms);
}

std::size_t dense_rank_mod(std::vector<std::vector<long long>> rows, long long p) {
  auto modp = [p](long long x) { return ((x % p) + p) % p; };
  auto inverse = [&](long long a) {
    long long r = 1, e = p - 2, b = modp(a);
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && modp(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    long long inv = inverse(rows[rank][c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      long long f = modp(rows[r][c]) * inv % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = modp(rows[r][k] - f * modp(rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
