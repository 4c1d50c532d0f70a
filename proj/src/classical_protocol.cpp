#include "iclab/classical_protocol.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace iclab {

int ClassicalProtocol::cc() const {
  int total = 0;
  for (const auto& r : rounds) total += r.bits;
  return total;
}

std::uint64_t ClassicalProtocol::run_transcript(std::uint64_t x, std::uint64_t y, std::uint64_t r,
                                                std::uint64_t ra, std::uint64_t rb) const {
  std::uint64_t pi = 0;
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const bool alice = alice_owns(static_cast<int>(i) + 1);
    const std::uint64_t own = alice ? x : y;
    const std::uint64_t own_rand = alice ? ra : rb;
    std::uint64_t msg = rounds[i].fn(own, own_rand, r, pi);
    if (msg >= (std::uint64_t{1} << rounds[i].bits))
      throw std::runtime_error("message wider than the declared round width");
    pi = (pi << rounds[i].bits) | msg;
  }
  return pi;
}

void ClassicalProtocol::validate() const {
  if (x_size < 1 || y_size < 1) throw std::invalid_argument("empty input domain");
  if (rounds.empty()) throw std::invalid_argument("protocol needs at least one round");
  for (const auto& r : rounds) {
    if (r.bits < 1 || r.bits > 20) throw std::invalid_argument("bad round width");
    if (!r.fn) throw std::invalid_argument("missing message function");
  }
  if (!output_fn) throw std::invalid_argument("missing output function");
  if (cc() > 40) throw std::invalid_argument("transcript too wide to enumerate");
}

TranscriptTable enumerate_joint(const ClassicalProtocol& p, const InputDist& mu) {
  p.validate();
  mu.validate();
  if (mu.nx != p.x_size || mu.ny != p.y_size)
    throw std::invalid_argument("distribution does not match the protocol's input domains");
  const std::uint64_t nr = p.pub_r.size(), na = p.alice_r.size(), nb = p.bob_r.size();
  const std::uint64_t cells = p.x_size * p.y_size * nr * na * nb;
  if (cells > kEnumerationCap) throw std::runtime_error("enumeration size above the configured cap");

  const std::uint64_t npi = std::uint64_t{1} << p.transcript_bits();
  JointTable table({{"x", p.x_size},
                    {"y", p.y_size},
                    {"r", nr},
                    {"ra", na},
                    {"rb", nb},
                    {"pi", npi},
                    {"out", 2}});
  table.reserve(cells);
  for (std::uint64_t x = 0; x < p.x_size; ++x)
    for (std::uint64_t y = 0; y < p.y_size; ++y) {
      const double pxy = mu.at(x, y);
      if (pxy == 0.0) continue;
      for (std::uint64_t r = 0; r < nr; ++r)
        for (std::uint64_t ra = 0; ra < na; ++ra)
          for (std::uint64_t rb = 0; rb < nb; ++rb) {
            const double prob = pxy * p.pub_r[r] * p.alice_r[ra] * p.bob_r[rb];
            if (prob == 0.0) continue;
            const std::uint64_t pi = p.run_transcript(x, y, r, ra, rb);
            const std::uint64_t out = static_cast<std::uint64_t>(p.output_fn(pi) ? 1 : 0);
            table.add({x, y, r, ra, rb, pi, out}, prob);
          }
    }
  table.finalize();
  return TranscriptTable{std::move(table)};
}

double classical_ic(const TranscriptTable& table) {
  const auto& j = table.joint;
  return j.conditional_mutual_information({"x"}, {"pi"}, {"y", "r", "rb"}) +
         j.conditional_mutual_information({"y"}, {"pi"}, {"x", "r", "ra"});
}

double classical_ic(const ClassicalProtocol& p, const InputDist& mu) {
  return classical_ic(enumerate_joint(p, mu));
}

double worst_case_error(const ClassicalProtocol& p, const BooleanFunction& f) {
  p.validate();
  if ((std::uint64_t{1} << f.x_bits) != p.x_size || (std::uint64_t{1} << f.y_bits) != p.y_size)
    throw std::invalid_argument("function domain does not match the protocol");
  const std::uint64_t nr = p.pub_r.size(), na = p.alice_r.size(), nb = p.bob_r.size();
  double worst = 0.0;
  for (std::uint64_t x = 0; x < p.x_size; ++x)
    for (std::uint64_t y = 0; y < p.y_size; ++y) {
      double wrong = 0.0;
      for (std::uint64_t r = 0; r < nr; ++r)
        for (std::uint64_t ra = 0; ra < na; ++ra)
          for (std::uint64_t rb = 0; rb < nb; ++rb) {
            const double prob = p.pub_r[r] * p.alice_r[ra] * p.bob_r[rb];
            if (prob == 0.0) continue;
            if (p.output_fn(p.run_transcript(x, y, r, ra, rb)) != f(x, y)) wrong += prob;
          }
      worst = std::max(worst, wrong);
    }
  return worst;
}

std::vector<double> transcript_distribution(const ClassicalProtocol& p, std::uint64_t x,
                                            std::uint64_t y) {
  p.validate();
  if (x >= p.x_size || y >= p.y_size) throw std::invalid_argument("input out of domain");
  const std::uint64_t nr = p.pub_r.size(), na = p.alice_r.size(), nb = p.bob_r.size();
  const int tb = p.transcript_bits();
  const std::uint64_t domain = nr * (std::uint64_t{1} << tb) * 2;
  if (domain > (std::uint64_t{1} << 26))
    throw std::runtime_error("transcript view too large to materialize densely");
  std::vector<double> dist(domain, 0.0);
  for (std::uint64_t r = 0; r < nr; ++r)
    for (std::uint64_t ra = 0; ra < na; ++ra)
      for (std::uint64_t rb = 0; rb < nb; ++rb) {
        const double prob = p.pub_r[r] * p.alice_r[ra] * p.bob_r[rb];
        if (prob == 0.0) continue;
        const std::uint64_t pi = p.run_transcript(x, y, r, ra, rb);
        const std::uint64_t out = static_cast<std::uint64_t>(p.output_fn(pi) ? 1 : 0);
        dist[((r << tb) | pi) * 2 + out] += prob;
      }
  return dist;
}

ClassicalProtocol classical_send_and_answer(const BooleanFunction& f) {
  ClassicalProtocol p;
  p.x_size = std::uint64_t{1} << f.x_bits;
  p.y_size = std::uint64_t{1} << f.y_bits;
  const int xb = f.x_bits;
  p.rounds.push_back({xb, [](std::uint64_t own, std::uint64_t, std::uint64_t, std::uint64_t) {
                        return own;
                      }});
  p.rounds.push_back({1, [f, xb](std::uint64_t own, std::uint64_t, std::uint64_t,
                                 std::uint64_t prefix) {
                        // prefix holds Alice's x
                        return static_cast<std::uint64_t>(f(prefix, own));
                      }});
  p.output_fn = [](std::uint64_t pi) { return static_cast<int>(pi & 1); };
  return p;
}

ClassicalProtocol classical_full_exchange(const BooleanFunction& f) {
  ClassicalProtocol p;
  p.x_size = std::uint64_t{1} << f.x_bits;
  p.y_size = std::uint64_t{1} << f.y_bits;
  p.rounds.push_back({f.x_bits, [](std::uint64_t own, std::uint64_t, std::uint64_t,
                                   std::uint64_t) { return own; }});
  p.rounds.push_back({f.y_bits, [](std::uint64_t own, std::uint64_t, std::uint64_t,
                                   std::uint64_t) { return own; }});
  const int yb = f.y_bits;
  p.output_fn = [f, yb](std::uint64_t pi) {
    std::uint64_t y = pi & ((std::uint64_t{1} << yb) - 1);
    std::uint64_t x = pi >> yb;
    return f(x, y);
  };
  return p;
}

ClassicalProtocol classical_eq_public_hash(int k, int reps) {
  if (k < 1 || reps < 1 || reps > 20) throw std::invalid_argument("bad hash parameters");
  ClassicalProtocol p;
  p.x_size = std::uint64_t{1} << k;
  p.y_size = std::uint64_t{1} << k;
  // public randomness: `reps` independent uniform k-bit parity vectors
  p.pub_r = ClassicalDistribution::uniform(std::size_t{1} << (k * reps));
  auto parities = [k, reps](std::uint64_t v, std::uint64_t r) {
    std::uint64_t out = 0;
    for (int j = 0; j < reps; ++j) {
      std::uint64_t vec = (r >> (k * (reps - 1 - j))) & ((std::uint64_t{1} << k) - 1);
      out = (out << 1) | (std::popcount(v & vec) & 1);
    }
    return out;
  };
  p.rounds.push_back({reps, [parities](std::uint64_t own, std::uint64_t, std::uint64_t r,
                                       std::uint64_t) { return parities(own, r); }});
  p.rounds.push_back({reps, [parities](std::uint64_t own, std::uint64_t, std::uint64_t r,
                                       std::uint64_t) { return parities(own, r); }});
  const int rb = reps;
  p.output_fn = [rb](std::uint64_t pi) {
    std::uint64_t bob = pi & ((std::uint64_t{1} << rb) - 1);
    std::uint64_t alice = pi >> rb;
    return alice == bob ? 1 : 0;
  };
  return p;
}

}  // namespace iclab
