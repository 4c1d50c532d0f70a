#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iclab/embedding.hpp"
#include "iclab/qinfo.hpp"
#include "iclab/random_instances.hpp"
#include "iclab/random_states.hpp"

using namespace iclab;

TEST_CASE("sink embedding spec: marginals, k_bound, invariance") {
  auto s3 = sink_embedding_spec(3);
  CHECK(s3.t == 2);
  CHECK(s3.k_bound == doctest::Approx(1.5));
  CHECK(s3.max_marginal() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(verify_invariance(s3));

  auto s4 = sink_embedding_spec(4);
  CHECK(s4.k_bound == doctest::Approx(2.0));
  CHECK(s4.max_marginal() == doctest::Approx(0.5).epsilon(1e-12));
  for (const auto& s : s4.sets) CHECK(s.prob == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(verify_invariance(s4));
}

TEST_CASE("invariance fails for a biased distribution with a nontrivial shift") {
  auto spec = sink_embedding_spec(3);
  spec.mu1 = {0.9, 0.1};  // biased Alice marginal, xor shift no longer fixes it
  CHECK(invariance_deviation(spec) > 0.1);
  CHECK(!verify_invariance(spec));
  // identity permutations pass for any distribution
  for (auto& s : spec.sets)
    for (std::uint64_t v = 0; v < s.perm_a.size(); ++v) s.perm_a[v] = v;
  CHECK(verify_invariance(spec));
}

TEST_CASE("classical embedding: exact protocol keeps equal inputs errorless") {
  const int m = 4;
  auto p = classical_full_exchange(sink_xor(m));
  auto q = classical_embed(p, m);
  auto f = eq(m - 1);
  // on c = d the embedded input always evaluates to 1, so no error
  const std::uint64_t n = std::uint64_t{1} << (m - 1);
  for (std::uint64_t c = 0; c < n; ++c) {
    // worst-case error restricted to the diagonal: run the enumeration
    double wrong = 0.0;
    const auto& pr = q.pub_r;
    const auto& ar = q.alice_r;
    const auto& br = q.bob_r;
    for (std::uint64_t r = 0; r < pr.size(); ++r)
      for (std::uint64_t ra = 0; ra < ar.size(); ++ra)
        for (std::uint64_t rb = 0; rb < br.size(); ++rb) {
          if (pr[r] * ar[ra] * br[rb] == 0.0) continue;
          if (q.output_fn(q.run_transcript(c, c, r, ra, rb)) != 1)
            wrong += pr[r] * ar[ra] * br[rb];
        }
    CHECK(wrong == doctest::Approx(0.0).epsilon(1e-12));
  }
  // the full worst-case error obeys the union bound exactly
  double err = worst_case_error(q, f);
  CHECK(err <= (m - 1) / std::pow(2.0, m - 2) + 1e-12);
}

TEST_CASE("classical embedding: IC bound at m=4 is tight for full communication") {
  const int m = 4;
  auto p = classical_full_exchange(sink_xor(m));
  auto q = classical_embed(p, m);
  const int e = m * (m - 1) / 2;
  double ic_p = classical_ic(p, InputDist::uniform(std::uint64_t{1} << e, std::uint64_t{1} << e));
  double ic_q = classical_ic(
      q, InputDist::uniform(std::uint64_t{1} << (m - 1), std::uint64_t{1} << (m - 1)));
  CHECK(ic_q <= (2.0 / m) * ic_p + 1e-9);
  // full communication reveals everything, so the bound is met with equality
  CHECK(ic_q == doctest::Approx((2.0 / m) * ic_p).epsilon(1e-9));
}

TEST_CASE("fixed-set embedding with S = [m] is the protocol itself") {
  auto p = quantum_sinkxor_send_protocol(3);
  auto spec = sink_embedding_spec(3);
  auto q = quantum_embed_fixed_set(p, spec, {0, 1, 2});
  CHECK(q.x_bits == p.x_bits);
  CHECK(q.a0 == p.a0);
  q.validate();
  // state-level: identical final states on every input
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y)
      CHECK(acceptance_probability(q, x, y) ==
            doctest::Approx(acceptance_probability(p, x, y)).epsilon(1e-12));
  Rng rng(7);
  Vec sigma = random_pure_vec(1 << 6, rng);
  CHECK(channel_identity_deviation(p, spec, {0, 1, 2}, sigma) < 1e-9);
}

TEST_CASE("channel identity for proper subsets on random inputs") {
  auto p = quantum_sinkxor_two_round_protocol(3);
  auto spec = sink_embedding_spec(3);
  Rng rng(13);
  for (const auto& s : spec.sets)
    for (int i = 0; i < 4; ++i) {
      Vec sigma = random_pure_vec(1 << 4, rng);
      CHECK(channel_identity_deviation(p, spec, s.coords, sigma) < 1e-9);
    }
}

TEST_CASE("embedded protocol is a valid protocol and solves Eq") {
  auto p = quantum_sinkxor_send_protocol(3);
  auto spec = sink_embedding_spec(3);
  auto bp = quantum_embed_averaged(p, spec);
  bp.validate();
  CHECK(bp.t() == p.t());
  CHECK(static_cast<int>(bp.branches.size()) == 3);
  double err = quantum_worst_case_error(bp, eq(2));
  // base error 0; sampled outside coordinates can fake a sink on c != d
  CHECK(err <= 0.0 + (3 - 1) / std::pow(2.0, 3 - 2) + 1e-9);
  // equal inputs are never rejected
  for (std::uint64_t c = 0; c < 4; ++c)
    CHECK(acceptance_probability(bp, c, c) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("object route and acceptance-table route agree on the embedded error") {
  auto spec = sink_embedding_spec(3);
  for (auto p : {quantum_sinkxor_send_protocol(3), quantum_sinkxor_two_round_protocol(3)}) {
    auto bp = quantum_embed_averaged(p, spec);
    double a = quantum_worst_case_error(bp, eq(2));
    double b = embedded_error_via_base(p, spec, eq(2));
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
}

TEST_CASE("SQIC of the fixed-set embedding equals the base-run expression") {
  auto p = quantum_sinkxor_two_round_protocol(3);
  auto spec = sink_embedding_spec(3);
  auto nu_base = embedded_input_dist(spec, 3);
  RoundTrace base(p, nu_base);
  auto nu_emb = embedded_input_dist(spec, spec.t);

  for (const auto& s : spec.sets) {
    auto q = quantum_embed_fixed_set(p, spec, s.coords);
    double lhs = sqic(run_rounds(q, nu_emb), nu_emb);
    // rhs: sum_odd I(X_S : Y R_Y B_i C_i) + sum_even I(Y_S : X R_X A_i C_i)
    // on the base run
    double rhs = 0.0;
    auto pick = [&s](const std::string& prefix) {
      std::vector<std::string> out;
      for (int c : s.coords) out.push_back(prefix + std::to_string(c + 1));
      return out;
    };
    auto cat = [](std::vector<std::string> a, const std::vector<std::string>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    for (int i = 1; i <= base.t(); ++i) {
      if (i % 2 == 1)
        rhs += mutual_information(
            base.psi(i), pick("X"),
            cat(cat(base.y_labels(), base.ry_labels()),
                cat(base.b_labels(i), base.c_labels(i))));
      else
        rhs += mutual_information(
            base.psi(i), pick("Y"),
            cat(cat(base.x_labels(), base.rx_labels()),
                cat(base.a_labels(i), base.c_labels(i))));
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
  }
}

TEST_CASE("averaged SQIC equals the branch average and obeys the Shearer bound") {
  auto p = quantum_sinkxor_two_round_protocol(3);
  auto spec = sink_embedding_spec(3);
  auto bp = quantum_embed_averaged(p, spec);
  auto nu_emb = embedded_input_dist(spec, spec.t);
  auto nu_base = embedded_input_dist(spec, spec.m_coords);

  double avg = sqic(bp, nu_emb);
  double by_branch = 0.0;
  for (std::size_t i = 0; i < bp.branches.size(); ++i) {
    auto plain = quantum_embed_fixed_set(p, spec, spec.sets[i].coords);
    by_branch += spec.sets[i].prob * sqic(run_rounds(plain, nu_emb), nu_emb);
  }
  CHECK(avg == doctest::Approx(by_branch).epsilon(1e-7));

  double base = sqic(run_rounds(p, nu_base), nu_base);
  CHECK(avg <= base / spec.k_bound + 1e-7);
}

TEST_CASE("point-mass spec on S=[m] with identity perms reproduces the protocol") {
  auto p = quantum_sinkxor_send_protocol(3);
  EmbeddingSpec spec;
  spec.m_coords = 3;
  spec.t = 3;
  spec.mu1 = {0.5, 0.5};
  spec.mu2 = {0.5, 0.5};
  spec.k_bound = 1.0;
  EmbeddingSet s;
  s.prob = 1.0;
  s.coords = {0, 1, 2};
  s.perm_a.resize(8);
  s.perm_b.resize(8);
  for (std::uint64_t v = 0; v < 8; ++v) s.perm_a[v] = s.perm_b[v] = v;
  spec.sets.push_back(s);
  spec.validate();
  auto bp = quantum_embed_averaged(p, spec);
  CHECK(quantum_worst_case_error(bp, sink_xor(3)) == doctest::Approx(0.0).epsilon(1e-12));
}
