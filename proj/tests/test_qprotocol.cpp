#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iclab/qinfo.hpp"
#include "iclab/quantum_protocol.hpp"
#include "iclab/random_instances.hpp"

using namespace iclab;

namespace {

// fresh EPR halves as messages: nothing depends on the inputs
QuantumProtocol input_independent_protocol() {
  QuantumProtocol p;
  p.x_bits = p.y_bits = 1;
  p.a0 = 2;
  p.b0 = 1;
  QuantumRound r1;
  r1.msg_bits = 1;
  Mat h(4, 4);
  // Hadamard on the first workspace qubit then CX onto the second
  auto blocks = blocks_from_gates(1, 2, {{"H", 0}, {"CX", 1, 0}});
  r1.blocks = {blocks[0], blocks[0]};
  p.rounds.push_back(r1);
  QuantumRound r2;
  r2.msg_bits = 1;
  r2.blocks = {Mat::Identity(4, 4), Mat::Identity(4, 4)};
  p.rounds.push_back(r2);
  Mat eff = Mat::Zero(4, 4);
  eff(0, 0) = eff(1, 1) = 1.0;
  p.meas_blocks.push_back(eff);
  return p;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("prepare_initial produces the purified input state") {
  QuantumProtocol p = quantum_eq_copy_protocol(1);
  auto mu = InputDist::uniform(2, 2);
  PureState psi = prepare_initial(p, mu);
  // (1/2) sum_{x,y} |x x y y 0>
  CHECK(psi.total_width() == 5);
  for (std::uint64_t x = 0; x < 2; ++x)
    for (std::uint64_t y = 0; y < 2; ++y) {
      std::uint64_t idx = ((((x << 1 | x) << 1 | y) << 1 | y) << 1);
      CHECK(std::abs(psi.amplitudes()[idx] - Cx(0.5, 0.0)) < 1e-12);
    }
  // point mass: basis state tensor theta0
  PureState point = prepare_initial(p, InputDist::point(2, 2, 1, 0));
  std::uint64_t idx = (std::uint64_t{0b1100} << 1);
  CHECK(std::abs(point.amplitudes()[idx] - Cx(1.0, 0.0)) < 1e-12);
  // marginal on X Y equals rho_mu
  DensityMatrix xy = partial_trace(psi, {"X1", "Y1"});
  CHECK(max_abs(xy.matrix() - Mat::Identity(4, 4) / 4.0) < 1e-12);
}

TEST_CASE("classical input marginal is read-only across rounds") {
  Rng rng(55);
  for (int s = 0; s < 10; ++s) {
    auto p = random_quantum_protocol(rng, 4, 10);
    auto mu = random_input_dist(rng, std::size_t{1} << p.x_bits, std::size_t{1} << p.y_bits);
    RoundTrace trace(p, mu);
    std::vector<std::string> xy;
    for (auto& l : {trace.x_labels(), trace.y_labels()})
      xy.insert(xy.end(), l.begin(), l.end());
    // the X Y marginal stays rho_mu exactly; the purification registers
    // decohere against the branches, so only the classical marginal is pinned
    for (int r = 0; r <= trace.t(); ++r) {
      Mat red = partial_trace(trace.psi(r), xy).matrix();
      Mat expect = Mat::Zero(red.rows(), red.cols());
      for (std::uint64_t x = 0; x < mu.nx; ++x)
        for (std::uint64_t y = 0; y < mu.ny; ++y)
          expect(x * mu.ny + y, x * mu.ny + y) = mu.at(x, y);
      CHECK(max_abs(red - expect) < 1e-9);
    }
  }
}

TEST_CASE("copy protocol solves Eq exactly; information costs are k") {
  for (int k = 1; k <= 2; ++k) {
    auto p = quantum_eq_copy_protocol(k);
    p.validate();
    CHECK(quantum_worst_case_error(p, eq(k)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(qcc(p) == k);
    auto mu = InputDist::uniform(std::size_t{1} << k, std::size_t{1} << k);
    RoundTrace trace(p, mu);
    CHECK(qic(trace) == doctest::Approx(k).epsilon(1e-9));
    CHECK(hqic(trace) == doctest::Approx(k).epsilon(1e-9));
    CHECK(sqic(trace, mu) == doctest::Approx(k).epsilon(1e-9));
  }
}

TEST_CASE("two-round Eq protocol: Alice outputs and the answer is exact") {
  auto p = quantum_eq_two_round_protocol(2);
  p.validate();
  CHECK(p.alice_outputs());
  CHECK(quantum_worst_case_error(p, eq(2)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(acceptance_probability(p, 3, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(acceptance_probability(p, 0, 1) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("1-round classical copy correlates the message with X") {
  auto p = quantum_eq_copy_protocol(1);
  auto mu = InputDist::uniform(2, 2);
  RoundTrace trace(p, mu);
  // against the purified pair the copy is GHZ-like, so the MI saturates at 2;
  // against the classical input register alone it is the classical 1 bit
  double mi_pair = mutual_information(trace.psi(1), {"X1", "RX1"}, trace.c_labels(1));
  CHECK(mi_pair == doctest::Approx(2.0).epsilon(1e-9));
  double mi_x = mutual_information(trace.psi(1), {"X1"}, trace.c_labels(1));
  CHECK(mi_x == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("input-independent messages carry no information") {
  auto p = input_independent_protocol();
  p.validate();
  auto mu = InputDist::uniform(2, 2);
  RoundTrace trace(p, mu);
  CHECK(qic(trace) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(hqic(trace) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(sqic(trace, mu) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("zero-round traces are rejected but dummy-width rounds work") {
  QuantumProtocol p;
  p.x_bits = p.y_bits = 1;
  p.a0 = 1;
  p.b0 = 1;
  CHECK_THROWS(p.validate());  // no rounds
  // a width-0 round is a legal no-op message
  QuantumRound dummy;
  dummy.msg_bits = 0;
  dummy.blocks = {Mat::Identity(2, 2), Mat::Identity(2, 2)};
  p.rounds.push_back(dummy);
  QuantumRound real;
  real.msg_bits = 1;
  real.blocks = blocks_from_gates(1, 1, {{"X", 0, -1, 0, 1}});
  p.rounds.push_back(real);
  p.meas_blocks.push_back(Mat::Identity(4, 4));
  p.validate();
  auto mu = InputDist::uniform(2, 2);
  RoundTrace trace(p, mu);
  CHECK(trace.t() == 2);
}

TEST_CASE("acceptance stays within [0,1] and SQIC demands product inputs") {
  Rng rng(77);
  auto p = random_quantum_protocol(rng, 3, 10);
  p.validate();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << p.x_bits); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << p.y_bits); ++y) {
      double a = acceptance_probability(p, x, y);
      CHECK(a >= 0.0);
      CHECK(a <= 1.0);
    }
  // correlated distribution rejected by sqic
  std::vector<double> corr(std::size_t{1} << (p.x_bits + p.y_bits), 0.0);
  corr[0] = 0.5;
  corr[corr.size() - 1] = 0.5;
  InputDist bad{std::size_t{1} << p.x_bits, std::size_t{1} << p.y_bits, corr};
  RoundTrace trace(p, bad);
  CHECK_THROWS(sqic(trace, bad));
}

TEST_CASE("QIC chain holds on random protocols under product inputs") {
  Rng rng(88);
  for (int s = 0; s < 12; ++s) {
    auto p = random_quantum_protocol(rng, 4, 10);
    auto mu = random_product_dist(rng, std::size_t{1} << p.x_bits, std::size_t{1} << p.y_bits);
    RoundTrace trace(p, mu);
    const double q = qic(trace), h = hqic(trace), sq = sqic(trace, mu);
    const double t = trace.t();
    CHECK(2.0 * qcc(p) >= q - 1e-7);
    CHECK(q >= sq / t - 1e-7);
    CHECK(sq >= h - 1e-7);
    CHECK(h >= q / (2.0 * t) - 1e-7);
  }
}

TEST_CASE("product inputs: Holevo terms equal the unconditioned form") {
  Rng rng(99);
  for (int s = 0; s < 8; ++s) {
    auto p = random_quantum_protocol(rng, 3, 10);
    auto mu = random_product_dist(rng, std::size_t{1} << p.x_bits, std::size_t{1} << p.y_bits);
    RoundTrace trace(p, mu);
    for (int i = 1; i <= trace.t(); ++i) {
      auto cat = [](std::vector<std::string> a, const std::vector<std::string>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
      };
      if (i % 2 == 1) {
        auto bc = cat(trace.b_labels(i), trace.c_labels(i));
        double lhs = conditional_mutual_information(trace.psi(i), trace.x_labels(), bc,
                                                    trace.y_labels());
        double mid = mutual_information(trace.psi(i), trace.x_labels(),
                                        cat(trace.y_labels(), bc));
        double rhs = mutual_information(
            trace.psi(i), trace.x_labels(),
            cat(cat(trace.y_labels(), trace.ry_labels()), bc));
        CHECK(std::abs(lhs - mid) < 1e-7);
        CHECK(mid <= rhs + 1e-7);
      }
    }
  }
}

TEST_CASE("error vs distance on the output region") {
  // exact protocols: distance between differing-output final states is 1
  auto p = quantum_eq_copy_protocol(1);
  auto run_y0 = run_on_input_trace(p, 0, 0);
  auto run_y1 = run_on_input_trace(p, 1, 0);
  Mat a = run_y0.reduced_b_prime(1);
  Mat b = run_y1.reduced_b_prime(1);
  CHECK(trace_distance_m(a, b) == doctest::Approx(1.0).epsilon(1e-9));

  // perturbed protocols keep the bound 1 - 2 err <= distance
  Rng rng(111);
  for (int s = 0; s < 10; ++s) {
    auto q = random_quantum_protocol(rng, 3, 10);
    BooleanFunction f;
    f.x_bits = q.x_bits;
    f.y_bits = q.y_bits;
    const std::uint64_t ny = std::uint64_t{1} << q.y_bits;
    std::vector<int> tt(std::size_t{1} << (q.x_bits + q.y_bits));
    for (auto& v : tt) v = static_cast<int>(rng.below(2));
    f.evaluate = [tt, ny](std::uint64_t x, std::uint64_t y) { return tt[x * ny + y]; };
    const double err = quantum_worst_case_error(q, f);
    const int t = q.t();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << q.x_bits); ++x)
      for (std::uint64_t y1 = 0; y1 < ny; ++y1)
        for (std::uint64_t y2 = 0; y2 < ny; ++y2) {
          if (f(x, y1) == f(x, y2)) continue;
          auto r1 = run_on_input_trace(q, x, y1);
          auto r2 = run_on_input_trace(q, x, y2);
          Mat m1 = q.alice_outputs() ? r1.reduced_a_prime(t) : r1.reduced_b_prime(t);
          Mat m2 = q.alice_outputs() ? r2.reduced_a_prime(t) : r2.reduced_b_prime(t);
          CHECK(trace_distance_m(m1, m2) >= 1.0 - 2.0 * err - 1e-7);
        }
  }
}

TEST_CASE("quantum cut-and-paste bound on random protocols") {
  Rng rng(123);
  for (int s = 0; s < 15; ++s) {
    auto p = random_quantum_protocol(rng, 4, 10);
    const std::uint64_t nx = std::uint64_t{1} << p.x_bits, ny = std::uint64_t{1} << p.y_bits;
    std::uint64_t u = rng.below(nx), u2 = rng.below(nx);
    std::uint64_t v = rng.below(ny), v2 = rng.below(ny);
    auto ruv = run_on_input_trace(p, u, v);
    auto ru2v = run_on_input_trace(p, u2, v);
    auto ruv2 = run_on_input_trace(p, u, v2);
    auto ru2v2 = run_on_input_trace(p, u2, v2);
    double hsum = 0.0;
    for (int k = 1; k <= p.t(); ++k) {
      if (k % 2 == 1)
        hsum += bures_m(ruv.reduced_b_prime(k), ru2v.reduced_b_prime(k));
      else
        hsum += bures_m(ruv.reduced_a_prime(k), ruv2.reduced_a_prime(k));
      double lhs = bures_m(ru2v.reduced_a_prime(k), ru2v2.reduced_a_prime(k));
      CHECK(lhs <= 2.0 * hsum + 1e-7);
    }
  }
}
