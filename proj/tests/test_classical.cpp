#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iclab/classical_protocol.hpp"
#include "iclab/qinfo.hpp"
#include "iclab/random_instances.hpp"
#include "iclab/state.hpp"

using namespace iclab;

namespace {

ClassicalProtocol alice_sends_bit() {
  ClassicalProtocol p;
  p.x_size = 2;
  p.y_size = 2;
  p.rounds.push_back({1, [](std::uint64_t own, std::uint64_t, std::uint64_t, std::uint64_t) {
                        return own;
                      }});
  p.output_fn = [](std::uint64_t pi) { return static_cast<int>(pi & 1); };
  return p;
}

ClassicalProtocol constant_protocol() {
  ClassicalProtocol p;
  p.x_size = 2;
  p.y_size = 2;
  p.rounds.push_back({1, [](std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t) {
                        return std::uint64_t{1};
                      }});
  p.output_fn = [](std::uint64_t) { return 1; };
  return p;
}

}  // namespace

TEST_CASE("enumeration marginals and transcript determinism") {
  auto p = alice_sends_bit();
  auto mu = InputDist::uniform(2, 2);
  auto table = enumerate_joint(p, mu);
  CHECK(table.joint.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  // marginal on (x,y) equals mu
  auto mx = table.joint.marginal("x");
  CHECK(mx[0] == doctest::Approx(0.5).epsilon(1e-12));
  // transcript uniform when Alice sends her uniform bit
  auto mpi = table.joint.marginal("pi");
  CHECK(mpi[0] == doctest::Approx(0.5).epsilon(1e-12));
  // constant protocol: transcript independent of the inputs
  auto t2 = enumerate_joint(constant_protocol(), mu);
  CHECK(t2.joint.mutual_information({"x", "y"}, {"pi"}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("information complexity closed forms") {
  auto mu = InputDist::uniform(2, 2);
  CHECK(classical_ic(constant_protocol(), mu) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(classical_ic(alice_sends_bit(), mu) == doctest::Approx(1.0).epsilon(1e-10));
  auto both = classical_full_exchange(eq(1));
  CHECK(classical_ic(both, mu) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("classical CMI on the joint table equals the dense diagonal-state route") {
  Rng rng(101);
  for (int s = 0; s < 20; ++s) {
    auto p = random_classical_protocol(rng);
    auto mu = random_input_dist(rng, p.x_size, p.y_size);
    auto table = enumerate_joint(p, mu);
    // embed (x, pi) margins into qubit registers and compare one CMI
    // via the density-matrix path at small sizes
    if (p.x_size != 2 || p.transcript_bits() > 3) continue;
    auto sub = table.joint;
    double a = sub.conditional_mutual_information({"x"}, {"pi"}, {"y"});
    // dense diagonal state over X (x) Y (x) PI, padding y to a power of two
    int yb = 2;  // y_size <= 4 always
    RegisterLayout layout(
        {{"X", 1}, {"Y", yb}, {"PI", p.transcript_bits()}});
    std::vector<double> diag(layout.dim(), 0.0);
    for (const auto& cell : sub.cells()) {
      std::uint64_t x = sub.value_of(cell.first, "x");
      std::uint64_t y = sub.value_of(cell.first, "y");
      std::uint64_t pi = sub.value_of(cell.first, "pi");
      diag[(((x << yb) | y) << p.transcript_bits()) | pi] += cell.second;
    }
    DensityMatrix rho = DensityMatrix::diagonal(layout, diag);
    double b = conditional_mutual_information(rho, {"X"}, {"PI"}, {"Y"});
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
  }
}

TEST_CASE("worst-case error of the hash protocol and exact protocols") {
  auto exact = classical_send_and_answer(eq(2));
  CHECK(worst_case_error(exact, eq(2)) == doctest::Approx(0.0).epsilon(1e-12));
  // one public inner-product hash round: worst unequal pair errs half the time
  auto hash1 = classical_eq_public_hash(2, 1);
  CHECK(worst_case_error(hash1, eq(2)) == doctest::Approx(0.5).epsilon(1e-12));
  auto hash2 = classical_eq_public_hash(2, 2);
  CHECK(worst_case_error(hash2, eq(2)) == doctest::Approx(0.25).epsilon(1e-12));
  // coin-flip output
  ClassicalProtocol coin;
  coin.x_size = coin.y_size = 2;
  coin.pub_r = ClassicalDistribution::uniform(2);
  coin.rounds.push_back({1, [](std::uint64_t, std::uint64_t, std::uint64_t r, std::uint64_t) {
                           return r;
                         }});
  coin.output_fn = [](std::uint64_t pi) { return static_cast<int>(pi & 1); };
  CHECK(worst_case_error(coin, eq(1)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("transcript distribution: deterministic protocols give point masses") {
  auto p = alice_sends_bit();
  auto d = transcript_distribution(p, 1, 0);
  double mass = 0.0;
  int support = 0;
  for (double v : d) {
    mass += v;
    if (v > 0) ++support;
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(support == 1);
}

TEST_CASE("cut-and-paste is an exact identity on the public view") {
  Rng rng(202);
  for (int s = 0; s < 200; ++s) {
    auto p = random_classical_protocol(rng);
    std::uint64_t x = rng.below(p.x_size), x2 = rng.below(p.x_size);
    std::uint64_t y = rng.below(p.y_size), y2 = rng.below(p.y_size);
    auto pxy = transcript_distribution(p, x, y);
    auto px2y2 = transcript_distribution(p, x2, y2);
    auto pxy2 = transcript_distribution(p, x, y2);
    auto px2y = transcript_distribution(p, x2, y);
    double lhs = classical_bures(pxy, px2y2);
    double rhs = classical_bures(pxy2, px2y);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("pythagorean property on random protocols") {
  Rng rng(203);
  for (int s = 0; s < 200; ++s) {
    auto p = random_classical_protocol(rng);
    std::uint64_t x = rng.below(p.x_size), x2 = rng.below(p.x_size);
    std::uint64_t y = rng.below(p.y_size), y2 = rng.below(p.y_size);
    auto pxy = transcript_distribution(p, x, y);
    auto pxy2 = transcript_distribution(p, x, y2);
    auto px2y = transcript_distribution(p, x2, y);
    auto px2y2 = transcript_distribution(p, x2, y2);
    double b1 = classical_bures(pxy2, px2y2);
    double b2 = classical_bures(pxy, px2y);
    double b3 = classical_bures(px2y2, pxy);
    CHECK(b1 * b1 + b2 * b2 <= 2.0 * b3 * b3 + 1e-7);
  }
}

TEST_CASE("IC never exceeds CC and is invariant under transcript relabeling") {
  Rng rng(204);
  for (int s = 0; s < 30; ++s) {
    auto p = random_classical_protocol(rng);
    auto mu = random_input_dist(rng, p.x_size, p.y_size);
    auto table = enumerate_joint(p, mu);
    double ic = classical_ic(table);
    CHECK(ic <= p.cc() + 1e-7);
    CHECK(ic >= -1e-9);
    // relabel transcript symbols by a random bijection
    const std::uint64_t npi = std::uint64_t{1} << p.transcript_bits();
    std::vector<std::uint64_t> perm(npi);
    for (std::uint64_t i = 0; i < npi; ++i) perm[i] = i;
    for (std::uint64_t i = npi; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
    auto remapped = table.joint.remap("pi", [&perm](std::uint64_t v) { return perm[v]; });
    double ic2 = classical_ic(TranscriptTable{std::move(remapped)});
    CHECK(ic == doctest::Approx(ic2).epsilon(1e-9));
  }
}

TEST_CASE("enumeration rejects mismatched distributions and oversized supports") {
  auto p = alice_sends_bit();
  CHECK_THROWS(enumerate_joint(p, InputDist::uniform(4, 2)));
  ClassicalProtocol big = p;
  big.pub_r = ClassicalDistribution::uniform(1 << 23);
  CHECK_THROWS(enumerate_joint(big, InputDist::uniform(2, 2)));
}
