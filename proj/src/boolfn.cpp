#include "iclab/boolfn.hpp"

#include <stdexcept>
#include <vector>

namespace iclab {

EdgeIndexing::EdgeIndexing(int m) : m_(m) {
  if (m < 3) throw std::invalid_argument("need at least 3 vertices");
}

int EdgeIndexing::position(int i, int j) const {
  if (i < 1 || j <= i || j > m_) throw std::invalid_argument("bad edge (i,j)");
  // edges (1,2),(1,3),...,(1,m),(2,3),... : edges before row i, then offset
  int before = (i - 1) * m_ - (i - 1) * i / 2;
  return before + (j - i - 1);
}

std::vector<int> EdgeIndexing::adjacent(int i) const {
  if (i < 1 || i > m_) throw std::invalid_argument("vertex out of range");
  std::vector<int> pos;
  for (int a = 1; a < i; ++a) pos.push_back(position(a, i));
  for (int b = i + 1; b <= m_; ++b) pos.push_back(position(i, b));
  return pos;
}

int sink(int m, std::uint64_t w) {
  EdgeIndexing idx(m);
  const int n = idx.edge_count();
  if (n < 64 && (w >> n) != 0) throw std::invalid_argument("input longer than C(m,2) bits");
  for (int i = 1; i <= m; ++i)
    if (project(m, w, i) == z_string(m, i)) return 1;
  return 0;
}

std::uint64_t z_string(int m, int i) {
  if (i < 1 || i > m) throw std::invalid_argument("vertex out of range");
  // edges (a,i) with a < i need z=1 (a -> i); edges (i,b) with b > i need
  // z=0 (b -> i). In lexicographic order that is 1^(i-1) 0^(m-i).
  return ((std::uint64_t{1} << (i - 1)) - 1) << (m - i);
}

std::uint64_t project(int m, std::uint64_t w, int i) {
  EdgeIndexing idx(m);
  const int n = idx.edge_count();
  auto adj = idx.adjacent(i);
  std::uint64_t out = 0;
  const int k = static_cast<int>(adj.size());
  for (int t = 0; t < k; ++t) {
    int bit = get_bit(w, adj[t], n);
    out |= static_cast<std::uint64_t>(bit) << (k - 1 - t);
  }
  return out;
}

BooleanFunction sink_xor(int m) {
  EdgeIndexing idx(m);
  const int n = idx.edge_count();
  BooleanFunction f;
  f.x_bits = n;
  f.y_bits = n;
  f.name = "sink_xor:" + std::to_string(m);
  f.evaluate = [m](std::uint64_t x, std::uint64_t y) { return sink(m, x ^ y); };
  return f;
}

BooleanFunction eq(int k) {
  if (k < 1) throw std::invalid_argument("eq needs at least 1 bit");
  BooleanFunction f;
  f.x_bits = k;
  f.y_bits = k;
  f.name = "eq:" + std::to_string(k);
  f.evaluate = [](std::uint64_t x, std::uint64_t y) { return x == y ? 1 : 0; };
  return f;
}

BooleanFunction function_by_name(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("function name needs a ':'");
  std::string kind = name.substr(0, colon);
  int arg = std::stoi(name.substr(colon + 1));
  if (kind == "sink_xor") return sink_xor(arg);
  if (kind == "eq") return eq(arg);
  throw std::invalid_argument("unknown function '" + name + "'");
}

}  // namespace iclab
