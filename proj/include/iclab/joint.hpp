#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace iclab {

struct JointVar {
  std::string name;
  std::uint64_t size = 0;
};

// Sparse joint distribution over a product of named finite sets. Cells are
// stored as (mixed-radix key, probability) pairs; marginals and information
// quantities are computed exactly by sort-and-merge grouping, so results are
// deterministic for a given insertion sequence. This is the classical
// counterpart of a diagonal density matrix: on such states the quantum
// conditional mutual information reduces to the grouping formula used here
// (the equivalence is exercised in the tests against the dense matrix route).
class JointTable {
 public:
  explicit JointTable(std::vector<JointVar> vars);

  const std::vector<JointVar>& vars() const { return vars_; }
  std::uint64_t var_size(const std::string& name) const;

  void reserve(std::size_t n) { cells_.reserve(n); }
  void add(const std::vector<std::uint64_t>& values, double prob);
  // merge duplicate keys; must be called before any query
  void finalize();
  bool finalized() const { return finalized_; }

  std::size_t support_size() const { return cells_.size(); }
  double total_mass() const;

  std::uint64_t pack(const std::vector<std::uint64_t>& values) const;
  std::uint64_t value_of(std::uint64_t key, const std::string& var) const;

  // Shannon entropy of the marginal on `group` (bits); empty group -> 0
  double entropy(const std::vector<std::string>& group) const;
  double mutual_information(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) const;
  double conditional_mutual_information(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b,
                                        const std::vector<std::string>& c) const;

  // dense marginal over one variable
  std::vector<double> marginal(const std::string& var) const;

  // new table with one variable's values pushed through a bijection
  JointTable remap(const std::string& var,
                   const std::function<std::uint64_t(std::uint64_t)>& bij) const;

  const std::vector<std::pair<std::uint64_t, double>>& cells() const { return cells_; }

 private:
  int index_of(const std::string& name) const;

  std::vector<JointVar> vars_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::pair<std::uint64_t, double>> cells_;
  bool finalized_ = false;
};

}  // namespace iclab
