#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iclab/boolfn.hpp"

using namespace iclab;

namespace {

// independent route: scan all ordered pairs and check edge directions
int sink_by_scan(int m, std::uint64_t w) {
  EdgeIndexing idx(m);
  const int n = idx.edge_count();
  for (int v = 1; v <= m; ++v) {
    bool all_in = true;
    for (int u = 1; u <= m && all_in; ++u) {
      if (u == v) continue;
      int i = std::min(u, v), j = std::max(u, v);
      int z = get_bit(w, idx.position(i, j), n);
      // z=1: edge i -> j. Incoming at v means the edge points to v.
      bool incoming = (z == 1) ? (j == v) : (i == v);
      if (!incoming) all_in = false;
    }
    if (all_in) return 1;
  }
  return 0;
}

}  // namespace

TEST_CASE("edge indexing is the lexicographic bijection") {
  EdgeIndexing idx(4);
  CHECK(idx.edge_count() == 6);
  CHECK(idx.position(1, 2) == 0);
  CHECK(idx.position(1, 4) == 2);
  CHECK(idx.position(2, 3) == 3);
  CHECK(idx.position(3, 4) == 5);
  CHECK(idx.adjacent(2) == std::vector<int>{0, 3, 4});
}

TEST_CASE("z_string closed forms at m=3") {
  CHECK(z_string(3, 1) == 0b00);
  CHECK(z_string(3, 2) == 0b10);
  CHECK(z_string(3, 3) == 0b11);
}

TEST_CASE("projection at m=3 picks the adjacent coordinates") {
  // w = (a,b,c) on edges (1,2),(1,3),(2,3)
  std::uint64_t w = 0b101;  // a=1, b=0, c=1
  CHECK(project(3, w, 1) == 0b10);  // (a,b)
  CHECK(project(3, w, 2) == 0b11);  // (a,c)
  CHECK(project(3, w, 3) == 0b01);  // (b,c)
}

TEST_CASE("sink on the hand-checked m=3 inputs") {
  CHECK(sink(3, 0b101) == 0);  // directed 3-cycle
  CHECK(sink(3, 0b111) == 1);  // v3 is the sink
  int ones = 0;
  for (std::uint64_t w = 0; w < 8; ++w) ones += sink(3, w);
  CHECK(ones == 6);
}

TEST_CASE("sink agrees with the direction-scan oracle and counts sinks") {
  for (int m = 3; m <= 5; ++m) {
    EdgeIndexing idx(m);
    const std::uint64_t total = std::uint64_t{1} << idx.edge_count();
    std::uint64_t ones = 0;
    for (std::uint64_t w = 0; w < total; ++w) {
      CHECK(sink(m, w) == sink_by_scan(m, w));
      ones += sink(m, w);
    }
    // sinks are mutually exclusive: m * 2^(C(m,2)-(m-1)) accepting inputs
    CHECK(ones == std::uint64_t(m) << (idx.edge_count() - (m - 1)));
  }
}

TEST_CASE("decomposition into equalities and sink uniqueness") {
  for (int m = 3; m <= 5; ++m) {
    EdgeIndexing idx(m);
    const int n = idx.edge_count();
    auto f = sink_xor(m);
    const std::uint64_t lim = std::uint64_t{1} << n;
    // exhaustive x for m=3,4; sampled stride for m=5 keeps the loop short
    const std::uint64_t stride = (m == 5) ? 41 : 1;
    for (std::uint64_t x = 0; x < lim; x += stride)
      for (std::uint64_t y = 0; y < lim; y += (m >= 4 ? 7 : 1)) {
        int onehits = 0;
        for (int i = 1; i <= m; ++i)
          if (project(m, x, i) == (project(m, y, i) ^ z_string(m, i))) ++onehits;
        CHECK(f(x, y) == (onehits > 0 ? 1 : 0));
        CHECK(onehits <= 1);
      }
  }
}

TEST_CASE("equal inputs always produce a sink") {
  for (int m = 3; m <= 5; ++m) {
    auto f = sink_xor(m);
    EdgeIndexing idx(m);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << idx.edge_count()); x += 3)
      CHECK(f(x, x) == 1);
  }
}

TEST_CASE("each vertex is the sink with probability 2^-(m-1) under uniform input") {
  for (int m = 3; m <= 5; ++m) {
    EdgeIndexing idx(m);
    const std::uint64_t total = std::uint64_t{1} << idx.edge_count();
    for (int i = 1; i <= m; ++i) {
      std::uint64_t count = 0;
      for (std::uint64_t w = 0; w < total; ++w)
        if (project(m, w, i) == z_string(m, i)) ++count;
      CHECK(count * (std::uint64_t{1} << (m - 1)) == total);
    }
  }
}

TEST_CASE("eq basics and name lookup") {
  auto f = eq(2);
  CHECK(f(0b01, 0b01) == 1);
  CHECK(f(0b01, 0b10) == 0);
  auto g = function_by_name("eq:3");
  CHECK(g.x_bits == 3);
  CHECK(g(5, 5) == 1);
  auto h = function_by_name("sink_xor:3");
  CHECK(h.x_bits == 3);
  CHECK_THROWS(function_by_name("parity:3"));
}
