#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace iclab {

// Total Boolean function of a two-party input. Bit strings are packed into
// integers with coordinate 0 in the most significant position.
struct BooleanFunction {
  int x_bits = 0;
  int y_bits = 0;
  std::function<int(std::uint64_t, std::uint64_t)> evaluate;
  std::string name;

  int operator()(std::uint64_t x, std::uint64_t y) const { return evaluate(x, y); }
};

// Coordinates for the complete graph on m vertices: edge variables z_{i,j}
// for 1 <= i < j <= m, ordered lexicographically by (i,j). z_{i,j} = 1 means
// the edge points from v_i to v_j.
class EdgeIndexing {
 public:
  explicit EdgeIndexing(int m);

  int m() const { return m_; }
  int edge_count() const { return m_ * (m_ - 1) / 2; }
  // position of edge (i,j), 1-based vertices, i < j
  int position(int i, int j) const;
  // the m-1 positions adjacent to vertex i, in lexicographic edge order
  std::vector<int> adjacent(int i) const;

 private:
  int m_;
};

// 1 iff some vertex of the tournament encoded by w has all edges incoming.
int sink(int m, std::uint64_t w);

// the unique pattern on the edges adjacent to v_i that makes v_i a sink
std::uint64_t z_string(int m, int i);

// w restricted to the coordinates adjacent to v_i (lexicographic order)
std::uint64_t project(int m, std::uint64_t w, int i);

// Sink(x xor y) on C(m,2)-bit inputs per side
BooleanFunction sink_xor(int m);

// [x == y] on k-bit inputs per side
BooleanFunction eq(int k);

// lookup by the names used in protocol files: "sink_xor:3", "eq:2"
BooleanFunction function_by_name(const std::string& name);

// bit i (0 = most significant of `bits` total) of v
inline int get_bit(std::uint64_t v, int i, int bits) { return (v >> (bits - 1 - i)) & 1u; }

}  // namespace iclab
