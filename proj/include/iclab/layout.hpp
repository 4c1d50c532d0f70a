#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace iclab {

struct Register {
  std::string label;
  int width = 0;  // number of two-level subsystems
};

// Ordered register declarations. The first-declared register occupies the
// most significant positions of a basis index: qubit at global position q
// (0 = leftmost/most significant) contributes bit (total-1-q) of the index.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<Register> regs);

  static RegisterLayout single(const std::string& label, int width) {
    return RegisterLayout({{label, width}});
  }

  int total_width() const { return total_; }
  std::uint64_t dim() const { return std::uint64_t{1} << total_; }
  const std::vector<Register>& registers() const { return regs_; }
  bool empty() const { return regs_.empty(); }

  bool has(const std::string& label) const;
  const Register& at(const std::string& label) const;
  // number of qubits declared before `label`
  int offset(const std::string& label) const;

  // Global qubit positions of the given registers, in declaration order.
  std::vector<int> positions(const std::vector<std::string>& labels) const;

  // Layout restricted to the given labels, keeping declaration order.
  RegisterLayout subset(const std::vector<std::string>& labels) const;
  // Complement of the given labels, in declaration order.
  std::vector<std::string> complement(const std::vector<std::string>& labels) const;

  // Concatenation (for tensor products); label collisions are an error.
  RegisterLayout concat(const RegisterLayout& other) const;

  // Bijective renaming; identical widths and order, new labels.
  RegisterLayout renamed(const std::map<std::string, std::string>& renaming) const;

  bool same_shape(const RegisterLayout& other) const;
  std::vector<std::string> labels() const;

 private:
  std::vector<Register> regs_;
  int total_ = 0;
};

}  // namespace iclab
