#include "extres/multidegree.hpp"

#include <numeric>
#include <sstream>

#include "extres/errors.hpp"

namespace extres {

int Multidegree::total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

IndexSet Multidegree::support() const {
  IndexSet s = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] != 0) s |= singleton(static_cast<int>(k) + 1);
  }
  return s;
}

Multidegree Multidegree::minus_unit(int k) const {
  Multidegree out = *this;
  auto& e = out.exps_.at(static_cast<std::size_t>(k - 1));
  if (e == 0) throw InvalidArgument("divided power exponent would become negative");
  --e;
  return out;
}

Multidegree Multidegree::plus_unit(int k) const {
  Multidegree out = *this;
  ++out.exps_.at(static_cast<std::size_t>(k - 1));
  return out;
}

std::string Multidegree::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (k) os << ',';
    os << exps_[k];
  }
  os << ')';
  return os.str();
}

namespace {

void fill(const std::vector<int>& vars, std::size_t pos, int remaining, std::vector<int>& exps,
          std::vector<Multidegree>& out) {
  if (pos + 1 == vars.size()) {
    exps[static_cast<std::size_t>(vars[pos] - 1)] = remaining;
    out.emplace_back(exps);
    exps[static_cast<std::size_t>(vars[pos] - 1)] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(vars[pos] - 1)] = e;
    fill(vars, pos + 1, remaining - e, exps, out);
  }
  exps[static_cast<std::size_t>(vars[pos] - 1)] = 0;
}

}  // namespace

std::vector<Multidegree> compositions(Ambient ambient, IndexSet allowed, int total) {
  if (!ambient.contains(allowed)) throw InvalidArgument("allowed variables exceed the ambient");
  std::vector<Multidegree> out;
  if (total < 0) return out;
  std::vector<int> vars = indices_of(allowed);
  if (vars.empty()) {
    if (total == 0) out.emplace_back(ambient);
    return out;
  }
  std::vector<int> exps(static_cast<std::size_t>(ambient.n()), 0);
  fill(vars, 0, total, exps, out);
  return out;
}

}  // namespace extres
