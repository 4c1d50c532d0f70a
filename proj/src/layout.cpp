#include "iclab/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace iclab {

RegisterLayout::RegisterLayout(std::vector<Register> regs) : regs_(std::move(regs)) {
  std::set<std::string> seen;
  for (const auto& r : regs_) {
    if (r.width < 1) throw std::invalid_argument("register '" + r.label + "' must have width >= 1");
    if (!seen.insert(r.label).second)
      throw std::invalid_argument("duplicate register label '" + r.label + "'");
    total_ += r.width;
  }
  if (total_ > 30) throw std::invalid_argument("layout exceeds 30 qubits");
}

bool RegisterLayout::has(const std::string& label) const {
  for (const auto& r : regs_)
    if (r.label == label) return true;
  return false;
}

const Register& RegisterLayout::at(const std::string& label) const {
  for (const auto& r : regs_)
    if (r.label == label) return r;
  throw std::invalid_argument("unknown register label '" + label + "'");
}

int RegisterLayout::offset(const std::string& label) const {
  int off = 0;
  for (const auto& r : regs_) {
    if (r.label == label) return off;
    off += r.width;
  }
  throw std::invalid_argument("unknown register label '" + label + "'");
}

std::vector<int> RegisterLayout::positions(const std::vector<std::string>& labels) const {
  std::set<std::string> want(labels.begin(), labels.end());
  if (want.size() != labels.size()) throw std::invalid_argument("repeated label in register set");
  std::vector<int> pos;
  int off = 0;
  for (const auto& r : regs_) {
    if (want.count(r.label)) {
      for (int q = 0; q < r.width; ++q) pos.push_back(off + q);
      want.erase(r.label);
    }
    off += r.width;
  }
  if (!want.empty()) throw std::invalid_argument("unknown register label '" + *want.begin() + "'");
  return pos;
}

RegisterLayout RegisterLayout::subset(const std::vector<std::string>& labels) const {
  std::set<std::string> want(labels.begin(), labels.end());
  std::vector<Register> kept;
  for (const auto& r : regs_) {
    if (want.count(r.label)) {
      kept.push_back(r);
      want.erase(r.label);
    }
  }
  if (!want.empty()) throw std::invalid_argument("unknown register label '" + *want.begin() + "'");
  return RegisterLayout(kept);
}

std::vector<std::string> RegisterLayout::complement(const std::vector<std::string>& labels) const {
  std::set<std::string> drop(labels.begin(), labels.end());
  for (const auto& l : drop)
    if (!has(l)) throw std::invalid_argument("unknown register label '" + l + "'");
  std::vector<std::string> rest;
  for (const auto& r : regs_)
    if (!drop.count(r.label)) rest.push_back(r.label);
  return rest;
}

RegisterLayout RegisterLayout::concat(const RegisterLayout& other) const {
  std::vector<Register> all = regs_;
  for (const auto& r : other.regs_) {
    if (has(r.label)) throw std::invalid_argument("register label collision on '" + r.label + "'");
    all.push_back(r);
  }
  return RegisterLayout(all);
}

RegisterLayout RegisterLayout::renamed(const std::map<std::string, std::string>& renaming) const {
  std::vector<Register> out = regs_;
  std::set<std::string> targets;
  for (auto& r : out) {
    auto it = renaming.find(r.label);
    if (it != renaming.end()) r.label = it->second;
    if (!targets.insert(r.label).second)
      throw std::invalid_argument("renaming collides on label '" + r.label + "'");
  }
  return RegisterLayout(out);
}

bool RegisterLayout::same_shape(const RegisterLayout& other) const {
  if (regs_.size() != other.regs_.size()) return false;
  for (std::size_t i = 0; i < regs_.size(); ++i)
    if (regs_[i].label != other.regs_[i].label || regs_[i].width != other.regs_[i].width)
      return false;
  return true;
}

std::vector<std::string> RegisterLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(regs_.size());
  for (const auto& r : regs_) out.push_back(r.label);
  return out;
}

}  // namespace iclab
