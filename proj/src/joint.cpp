#include "iclab/joint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iclab {

JointTable::JointTable(std::vector<JointVar> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("joint table needs at least one variable");
  radix_.assign(vars_.size(), 1);
  long double capacity = 1.0L;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    if (vars_[i].size == 0) throw std::invalid_argument("variable with empty domain");
    if (i + 1 < vars_.size()) radix_[i] = radix_[i + 1] * vars_[i + 1].size;
    capacity *= static_cast<long double>(vars_[i].size);
  }
  if (capacity > 9.2e18L) throw std::invalid_argument("joint key space exceeds 2^63");
}

int JointTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown joint variable '" + name + "'");
}

std::uint64_t JointTable::var_size(const std::string& name) const {
  return vars_[index_of(name)].size;
}

std::uint64_t JointTable::pack(const std::vector<std::uint64_t>& values) const {
  if (values.size() != vars_.size()) throw std::invalid_argument("value count mismatch");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (values[i] >= vars_[i].size) throw std::invalid_argument("value out of domain");
    key += values[i] * radix_[i];
  }
  return key;
}

std::uint64_t JointTable::value_of(std::uint64_t key, const std::string& var) const {
  int i = index_of(var);
  return (key / radix_[i]) % vars_[i].size;
}

void JointTable::add(const std::vector<std::uint64_t>& values, double prob) {
  if (prob == 0.0) return;
  if (prob < 0.0) throw std::invalid_argument("negative probability");
  cells_.emplace_back(pack(values), prob);
  finalized_ = false;
}

void JointTable::finalize() {
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < cells_.size(); ++r) {
    if (w > 0 && cells_[w - 1].first == cells_[r].first)
      cells_[w - 1].second += cells_[r].second;
    else
      cells_[w++] = cells_[r];
  }
  cells_.resize(w);
  finalized_ = true;
}

double JointTable::total_mass() const {
  double s = 0.0;
  for (const auto& c : cells_) s += c.second;
  return s;
}

double JointTable::entropy(const std::vector<std::string>& group) const {
  if (!finalized_) throw std::logic_error("joint table not finalized");
  if (group.empty()) return 0.0;
  std::vector<int> idx;
  idx.reserve(group.size());
  for (const auto& g : group) idx.push_back(index_of(g));

  std::vector<std::pair<std::uint64_t, double>> sub;
  sub.reserve(cells_.size());
  for (const auto& c : cells_) {
    std::uint64_t key = 0;
    for (int i : idx) key = key * vars_[i].size + (c.first / radix_[i]) % vars_[i].size;
    sub.emplace_back(key, c.second);
  }
  std::sort(sub.begin(), sub.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  double h = 0.0;
  std::size_t i = 0;
  while (i < sub.size()) {
    double p = sub[i].second;
    std::size_t j = i + 1;
    while (j < sub.size() && sub[j].first == sub[i].first) p += sub[j++].second;
    if (p > 0.0) h -= p * std::log2(p);
    i = j;
  }
  return h;
}

namespace {
std::vector<std::string> join_groups(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}
}  // namespace

double JointTable::mutual_information(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) const {
  return entropy(a) + entropy(b) - entropy(join_groups(a, b));
}

double JointTable::conditional_mutual_information(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b,
                                                  const std::vector<std::string>& c) const {
  return entropy(join_groups(a, c)) + entropy(join_groups(b, c)) -
         entropy(join_groups(join_groups(a, b), c)) - entropy(c);
}

std::vector<double> JointTable::marginal(const std::string& var) const {
  if (!finalized_) throw std::logic_error("joint table not finalized");
  int i = index_of(var);
  std::vector<double> out(vars_[i].size, 0.0);
  for (const auto& c : cells_) out[(c.first / radix_[i]) % vars_[i].size] += c.second;
  return out;
}

JointTable JointTable::remap(const std::string& var,
                             const std::function<std::uint64_t(std::uint64_t)>& bij) const {
  int i = index_of(var);
  JointTable out(vars_);
  out.cells_.reserve(cells_.size());
  for (const auto& c : cells_) {
    std::uint64_t v = (c.first / radix_[i]) % vars_[i].size;
    std::uint64_t nv = bij(v);
    if (nv >= vars_[i].size) throw std::invalid_argument("bijection leaves the domain");
    std::uint64_t key = c.first + (nv - v) * radix_[i];
    out.cells_.emplace_back(key, c.second);
  }
  out.finalize();
  return out;
}

}  // namespace iclab
