#include "iclab/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "iclab/kernels.hpp"

namespace iclab {

namespace {

bool is_permutation_table(const std::vector<std::uint64_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

double coord_prob(const std::vector<double>& mu, std::uint64_t packed, int coords, int cbits) {
  double p = 1.0;
  const std::uint64_t mask = (std::uint64_t{1} << cbits) - 1;
  for (int c = 0; c < coords; ++c) {
    std::uint64_t v = (packed >> (cbits * (coords - 1 - c))) & mask;
    p *= mu[v];
  }
  return p;
}

// purified product sample over [V(out_bits) RV(out_bits)]
Vec pair_state(const std::vector<double>& mu, int out_coords, int cbits) {
  const int out_bits = out_coords * cbits;
  Vec v = Vec::Zero(std::int64_t{1} << (2 * out_bits));
  if (out_bits == 0) {
    v[0] = Cx(1.0, 0.0);
    return v;
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << out_bits); ++x) {
    double p = coord_prob(mu, x, out_coords, cbits);
    v[(x << out_bits) | x] = Cx(std::sqrt(p), 0.0);
  }
  return v;
}

}  // namespace

void EmbeddingSpec::validate() const {
  if (m_coords < 1 || t < 1 || t > m_coords) throw std::invalid_argument("bad set sizes");
  if (xc < 1 || yc < 1) throw std::invalid_argument("bad coordinate widths");
  if (mu1.size() != (std::size_t{1} << xc) || mu2.size() != (std::size_t{1} << yc))
    throw std::invalid_argument("per-coordinate distribution size mismatch");
  double s1 = 0.0, s2 = 0.0;
  for (double v : mu1) s1 += v;
  for (double v : mu2) s2 += v;
  if (std::abs(s1 - 1.0) > 1e-12 || std::abs(s2 - 1.0) > 1e-12)
    throw std::invalid_argument("per-coordinate distributions must sum to 1");
  if (sets.empty()) throw std::invalid_argument("no sets in the distribution");
  double total = 0.0;
  for (const auto& s : sets) {
    total += s.prob;
    if (static_cast<int>(s.coords.size()) != t) throw std::invalid_argument("set size mismatch");
    if (!std::is_sorted(s.coords.begin(), s.coords.end()) ||
        std::adjacent_find(s.coords.begin(), s.coords.end()) != s.coords.end())
      throw std::invalid_argument("set coordinates must be strictly increasing");
    if (s.coords.front() < 0 || s.coords.back() >= m_coords)
      throw std::invalid_argument("set coordinate out of range");
    if (s.perm_a.size() != (std::size_t{1} << (t * xc)) || !is_permutation_table(s.perm_a))
      throw std::invalid_argument("perm_a is not a permutation of the embedded basis");
    if (s.perm_b.size() != (std::size_t{1} << (t * yc)) || !is_permutation_table(s.perm_b))
      throw std::invalid_argument("perm_b is not a permutation of the embedded basis");
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("set probabilities must sum to 1");
  if (max_marginal() > 1.0 / k_bound + 1e-12)
    throw std::invalid_argument("marginal bound violates the declared k_bound");
}

double EmbeddingSpec::max_marginal() const {
  std::vector<double> marg(m_coords, 0.0);
  for (const auto& s : sets)
    for (int c : s.coords) marg[c] += s.prob;
  return *std::max_element(marg.begin(), marg.end());
}

EmbeddingSpec sink_embedding_spec(int m) {
  EdgeIndexing idx(m);
  EmbeddingSpec spec;
  spec.m_coords = idx.edge_count();
  spec.t = m - 1;
  spec.xc = spec.yc = 1;
  spec.mu1 = {0.5, 0.5};
  spec.mu2 = {0.5, 0.5};
  spec.k_bound = m / 2.0;
  for (int i = 1; i <= m; ++i) {
    EmbeddingSet s;
    s.prob = 1.0 / m;
    s.coords = idx.adjacent(i);
    const std::uint64_t z = z_string(m, i);
    const std::uint64_t n = std::uint64_t{1} << (m - 1);
    s.perm_a.resize(n);
    s.perm_b.resize(n);
    for (std::uint64_t v = 0; v < n; ++v) {
      s.perm_a[v] = v ^ z;
      s.perm_b[v] = v;
    }
    spec.sets.push_back(std::move(s));
  }
  spec.validate();
  return spec;
}

double invariance_deviation(const EmbeddingSpec& spec) {
  double worst = 0.0;
  const std::uint64_t nx = std::uint64_t{1} << (spec.t * spec.xc);
  const std::uint64_t ny = std::uint64_t{1} << (spec.t * spec.yc);
  for (const auto& s : spec.sets) {
    for (std::uint64_t x = 0; x < nx; ++x)
      for (std::uint64_t y = 0; y < ny; ++y) {
        double before = coord_prob(spec.mu1, x, spec.t, spec.xc) *
                        coord_prob(spec.mu2, y, spec.t, spec.yc);
        double after = coord_prob(spec.mu1, s.perm_a[x], spec.t, spec.xc) *
                       coord_prob(spec.mu2, s.perm_b[y], spec.t, spec.yc);
        worst = std::max(worst, std::abs(after - before));
      }
  }
  return worst;
}

bool verify_invariance(const EmbeddingSpec& spec, double tol) {
  return invariance_deviation(spec) <= tol;
}

InputDist embedded_input_dist(const EmbeddingSpec& spec, int copies) {
  std::vector<double> px(std::size_t{1} << (copies * spec.xc));
  std::vector<double> py(std::size_t{1} << (copies * spec.yc));
  for (std::uint64_t x = 0; x < px.size(); ++x) px[x] = coord_prob(spec.mu1, x, copies, spec.xc);
  for (std::uint64_t y = 0; y < py.size(); ++y) py[y] = coord_prob(spec.mu2, y, copies, spec.yc);
  return InputDist::product(px, py);
}

std::uint64_t merge_coords(const std::vector<int>& s_coords, int m, int cbits,
                           std::uint64_t inside, std::uint64_t outside) {
  const std::uint64_t mask = (std::uint64_t{1} << cbits) - 1;
  const int t = static_cast<int>(s_coords.size());
  const int o = m - t;
  std::uint64_t full = 0;
  int si = 0, oi = 0;
  for (int c = 0; c < m; ++c) {
    std::uint64_t v;
    if (si < t && s_coords[si] == c) {
      v = (inside >> (cbits * (t - 1 - si))) & mask;
      ++si;
    } else {
      v = (outside >> (cbits * (o - 1 - oi))) & mask;
      ++oi;
    }
    full = (full << cbits) | v;
  }
  return full;
}

// ---- classical reduction ------------------------------------------------------

ClassicalProtocol classical_embed(const ClassicalProtocol& p, int m) {
  EdgeIndexing idx(m);
  const int e = idx.edge_count();
  const int k = m - 1;
  if (p.x_size != (std::uint64_t{1} << e) || p.y_size != (std::uint64_t{1} << e))
    throw std::invalid_argument("protocol domain is not C(m,2) bits per side");

  // coordinate sets E_{v_i}, shared by the message closures
  std::vector<std::vector<int>> adj(m);
  std::vector<std::uint64_t> z(m);
  for (int i = 1; i <= m; ++i) {
    adj[i - 1] = idx.adjacent(i);
    z[i - 1] = z_string(m, i);
  }

  const std::uint64_t out_count = std::uint64_t{1} << (e - k);
  ClassicalProtocol q;
  q.x_size = std::uint64_t{1} << k;
  q.y_size = std::uint64_t{1} << k;
  // fresh public coordinate choice times p's public randomness
  const std::uint64_t pr = p.pub_r.size();
  {
    std::vector<double> probs(m * pr);
    for (int i = 0; i < m; ++i)
      for (std::uint64_t r = 0; r < pr; ++r) probs[i * pr + r] = p.pub_r[r] / m;
    q.pub_r = ClassicalDistribution(std::move(probs));
  }
  // fresh uniform outside samples times the parties' private randomness
  const std::uint64_t ar = p.alice_r.size(), br = p.bob_r.size();
  {
    std::vector<double> probs(out_count * ar);
    for (std::uint64_t o = 0; o < out_count; ++o)
      for (std::uint64_t r = 0; r < ar; ++r)
        probs[o * ar + r] = p.alice_r[r] / static_cast<double>(out_count);
    q.alice_r = ClassicalDistribution(std::move(probs));
  }
  {
    std::vector<double> probs(out_count * br);
    for (std::uint64_t o = 0; o < out_count; ++o)
      for (std::uint64_t r = 0; r < br; ++r)
        probs[o * br + r] = p.bob_r[r] / static_cast<double>(out_count);
    q.bob_r = ClassicalDistribution(std::move(probs));
  }

  for (std::size_t ri = 0; ri < p.rounds.size(); ++ri) {
    const bool alice = ClassicalProtocol::alice_owns(static_cast<int>(ri) + 1);
    auto base_fn = p.rounds[ri].fn;
    ClassicalRound round;
    round.bits = p.rounds[ri].bits;
    round.fn = [base_fn, adj, z, m, pr, ar, br, alice](std::uint64_t own, std::uint64_t own_rand,
                                                       std::uint64_t pub, std::uint64_t prefix) {
      const std::uint64_t i = pub / pr;           // which E_{v_i}
      const std::uint64_t base_pub = pub % pr;    // p's public randomness
      const std::uint64_t own_div = alice ? ar : br;
      const std::uint64_t outside = own_rand / own_div;
      const std::uint64_t base_rand = own_rand % own_div;
      const std::uint64_t embedded = alice ? own : own ^ z[i];
      const std::uint64_t full = merge_coords(adj[i], m, 1, embedded, outside);
      return base_fn(full, base_rand, base_pub, prefix);
    };
    q.rounds.push_back(std::move(round));
  }
  q.output_fn = p.output_fn;
  return q;
}

// ---- quantum embeddings -------------------------------------------------------

namespace {

// block-diagonal lift of per-full-input blocks onto Alice's extended
// workspace [Xout RXout | base]: controlled on Xout, identity on RXout
Mat lift_alice(const std::vector<Mat>& base_blocks, std::uint64_t v_inside,
               const std::vector<int>& coords, int m, int cbits, int out_bits) {
  const std::int64_t base_dim = base_blocks.front().rows();
  const std::int64_t odim = std::int64_t{1} << out_bits;
  Mat out = Mat::Zero(odim * odim * base_dim, odim * odim * base_dim);
  for (std::int64_t xo = 0; xo < odim; ++xo) {
    const std::uint64_t full = merge_coords(coords, m, cbits, v_inside, xo);
    const Mat& g = base_blocks[full];
    for (std::int64_t rx = 0; rx < odim; ++rx) {
      const std::int64_t off = ((xo * odim) + rx) * base_dim;
      out.block(off, off, base_dim, base_dim) = g;
    }
  }
  return out;
}

// block-diagonal lift onto Bob's extended workspace [base | Yout RYout]
Mat lift_bob(const std::vector<Mat>& base_blocks, std::uint64_t v_inside,
             const std::vector<int>& coords, int m, int cbits, int out_bits) {
  const std::int64_t base_dim = base_blocks.front().rows();
  const std::int64_t odim = std::int64_t{1} << out_bits;
  const std::int64_t dim = base_dim * odim * odim;
  Mat out = Mat::Zero(dim, dim);
  for (std::int64_t yo = 0; yo < odim; ++yo) {
    const std::uint64_t full = merge_coords(coords, m, cbits, v_inside, yo);
    const Mat& g = base_blocks[full];
    for (std::int64_t i = 0; i < base_dim; ++i)
      for (std::int64_t j = 0; j < base_dim; ++j) {
        if (g(i, j) == Cx(0.0, 0.0)) continue;
        for (std::int64_t ry = 0; ry < odim; ++ry)
          out((i * odim + yo) * odim + ry, (j * odim + yo) * odim + ry) = g(i, j);
      }
  }
  return out;
}

}  // namespace

QuantumProtocol quantum_embed_fixed_set(const QuantumProtocol& p, const EmbeddingSpec& spec,
                                        const std::vector<int>& coords) {
  spec.validate();
  const int m = spec.m_coords;
  if (p.x_bits != m * spec.xc || p.y_bits != m * spec.yc)
    throw std::invalid_argument("protocol input widths do not match the coordinate layout");
  const int t = static_cast<int>(coords.size());
  if (t < 1 || t > m) throw std::invalid_argument("bad embedded set size");
  const int o = m - t;
  const int ox = o * spec.xc, oy = o * spec.yc;

  QuantumProtocol q;
  q.x_bits = t * spec.xc;
  q.y_bits = t * spec.yc;
  q.a0 = 2 * ox + p.a0;
  q.b0 = p.b0 + 2 * oy;
  q.function_name = p.function_name.empty() ? "" : p.function_name + "@embedded";

  // [Xout RXout | pA0 pB0 | Yout RYout]
  Vec pa = pair_state(spec.mu1, o, spec.xc);
  Vec pb = pair_state(spec.mu2, o, spec.yc);
  q.theta0 = tensor_product(tensor_product(pa, p.initial_workspace()), pb);

  for (int r = 1; r <= p.t(); ++r) {
    const auto& base = p.rounds[r - 1];
    QuantumRound round;
    round.msg_bits = base.msg_bits;
    const bool alice = (r % 2 == 1);
    const std::uint64_t values = std::uint64_t{1} << (alice ? q.x_bits : q.y_bits);
    for (std::uint64_t v = 0; v < values; ++v)
      round.blocks.push_back(alice ? lift_alice(base.blocks, v, coords, m, spec.xc, ox)
                                   : lift_bob(base.blocks, v, coords, m, spec.yc, oy));
    q.rounds.push_back(std::move(round));
  }

  // measurement on the outputter's extended final region
  const bool alice_out = p.alice_outputs();
  if (p.meas_blocks.size() == 1) {
    const std::int64_t odim = std::int64_t{1} << (alice_out ? ox : oy);
    Mat id = Mat::Identity(odim * odim, odim * odim);
    q.meas_blocks.push_back(alice_out ? tensor_product(id, p.meas_blocks[0])
                                      : tensor_product(p.meas_blocks[0], id));
  } else {
    const std::uint64_t values = std::uint64_t{1} << (alice_out ? q.x_bits : q.y_bits);
    for (std::uint64_t v = 0; v < values; ++v)
      q.meas_blocks.push_back(alice_out
                                  ? lift_alice(p.meas_blocks, v, coords, m, spec.xc, ox)
                                  : lift_bob(p.meas_blocks, v, coords, m, spec.yc, oy));
  }
  return q;
}

void BranchedProtocol::validate(const Tolerances& tol) const {
  if (branches.size() != probs.size() || branches.empty())
    throw std::invalid_argument("branch/probability mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    total += probs[i];
    branches[i].validate(tol);
    if (branches[i].x_bits != x_bits || branches[i].y_bits != y_bits ||
        branches[i].t() != t_rounds)
      throw std::invalid_argument("branches disagree on shape");
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("branch probabilities must sum to 1");
}

BranchedProtocol quantum_embed_averaged(const QuantumProtocol& p, const EmbeddingSpec& spec) {
  spec.validate();
  BranchedProtocol bp;
  bp.x_bits = spec.t * spec.xc;
  bp.y_bits = spec.t * spec.yc;
  bp.t_rounds = p.t();
  bp.function_name = p.function_name;
  for (const auto& s : spec.sets) {
    QuantumProtocol branch = quantum_embed_fixed_set(p, spec, s.coords);
    // fold the input permutations into the block indexing: running the
    // reindexed protocol on (c,d) equals running Pi_S on (perm_a c, perm_b d)
    for (int r = 1; r <= branch.t(); ++r) {
      auto& blocks = branch.rounds[r - 1].blocks;
      const auto& perm = (r % 2 == 1) ? s.perm_a : s.perm_b;
      std::vector<Mat> re(blocks.size());
      for (std::size_t v = 0; v < blocks.size(); ++v) re[v] = blocks[perm[v]];
      blocks = std::move(re);
    }
    if (branch.meas_blocks.size() > 1) {
      const auto& perm = branch.alice_outputs() ? s.perm_a : s.perm_b;
      std::vector<Mat> re(branch.meas_blocks.size());
      for (std::size_t v = 0; v < re.size(); ++v) re[v] = branch.meas_blocks[perm[v]];
      branch.meas_blocks = std::move(re);
    }
    bp.probs.push_back(s.prob);
    bp.branches.push_back(std::move(branch));
  }
  return bp;
}

double acceptance_probability(const BranchedProtocol& bp, std::uint64_t x, std::uint64_t y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < bp.branches.size(); ++i)
    acc += bp.probs[i] * acceptance_probability(bp.branches[i], x, y);
  return acc;
}

double quantum_worst_case_error(const BranchedProtocol& bp, const BooleanFunction& f) {
  bp.validate();
  if (f.x_bits != bp.x_bits || f.y_bits != bp.y_bits)
    throw std::invalid_argument("function domain does not match the embedded protocol");
  double worst = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bp.x_bits); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << bp.y_bits); ++y) {
      const double acc = acceptance_probability(bp, x, y);
      worst = std::max(worst, f(x, y) ? 1.0 - acc : acc);
    }
  return worst;
}

double sqic(const BranchedProtocol& bp, const InputDist& nu) {
  double total = 0.0;
  for (std::size_t i = 0; i < bp.branches.size(); ++i)
    total += bp.probs[i] * sqic(run_rounds(bp.branches[i], nu), nu);
  return total;
}

double hqic(const BranchedProtocol& bp, const InputDist& nu) {
  double total = 0.0;
  for (std::size_t i = 0; i < bp.branches.size(); ++i)
    total += bp.probs[i] * hqic(run_rounds(bp.branches[i], nu));
  return total;
}

double qic(const BranchedProtocol& bp, const InputDist& nu) {
  double total = 0.0;
  for (std::size_t i = 0; i < bp.branches.size(); ++i)
    total += bp.probs[i] * qic(run_rounds(bp.branches[i], nu));
  return total;
}

int qcc(const BranchedProtocol& bp) { return bp.branches.empty() ? 0 : bp.branches.front().qcc(); }

double embedded_error_via_base(const QuantumProtocol& p, const EmbeddingSpec& spec,
                               const BooleanFunction& f_target) {
  spec.validate();
  p.validate();
  const int m = spec.m_coords;
  if (f_target.x_bits != spec.t * spec.xc || f_target.y_bits != spec.t * spec.yc)
    throw std::invalid_argument("target function does not match the embedded input widths");
  // p's full acceptance table
  const std::uint64_t nx = std::uint64_t{1} << p.x_bits, ny = std::uint64_t{1} << p.y_bits;
  std::vector<double> acc(nx * ny);
  for (std::uint64_t x = 0; x < nx; ++x)
    for (std::uint64_t y = 0; y < ny; ++y) acc[x * ny + y] = acceptance_probability(p, x, y);

  const int o = m - spec.t;
  const std::uint64_t ox_count = std::uint64_t{1} << (o * spec.xc);
  const std::uint64_t oy_count = std::uint64_t{1} << (o * spec.yc);
  double worst = 0.0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << f_target.x_bits); ++c)
    for (std::uint64_t d = 0; d < (std::uint64_t{1} << f_target.y_bits); ++d) {
      double accept = 0.0;
      for (const auto& s : spec.sets) {
        double branch = 0.0;
        for (std::uint64_t xo = 0; xo < ox_count; ++xo) {
          const double pxo = coord_prob(spec.mu1, xo, o, spec.xc);
          const std::uint64_t x = merge_coords(s.coords, m, spec.xc, s.perm_a[c], xo);
          for (std::uint64_t yo = 0; yo < oy_count; ++yo) {
            const double pyo = coord_prob(spec.mu2, yo, o, spec.yc);
            const std::uint64_t y = merge_coords(s.coords, m, spec.yc, s.perm_b[d], yo);
            branch += pxo * pyo * acc[x * ny + y];
          }
        }
        accept += s.prob * branch;
      }
      worst = std::max(worst, f_target(c, d) ? 1.0 - accept : accept);
    }
  return worst;
}

double channel_identity_deviation(const QuantumProtocol& p, const EmbeddingSpec& spec,
                                  const std::vector<int>& coords, const Vec& sigma) {
  const int m = spec.m_coords;
  const int t = static_cast<int>(coords.size());
  const int o = m - t;
  const int tx = t * spec.xc, ty = t * spec.yc;
  const int ox = o * spec.xc, oy = o * spec.yc;
  if (sigma.size() != (Eigen::Index{1} << (tx + ty)))
    throw std::invalid_argument("input state must live on X_S Y_S");

  QuantumProtocol emb = quantum_embed_fixed_set(p, spec, coords);

  // run A: the embedded protocol object on [XS YS W']
  const int nw = emb.workspace_width();
  const int total_a = tx + ty + nw;
  std::vector<int> x_pos_a(tx), y_pos_a(ty);
  for (int i = 0; i < tx; ++i) x_pos_a[i] = i;
  for (int i = 0; i < ty; ++i) y_pos_a[i] = tx + i;
  Vec init_a = tensor_product(sigma, emb.initial_workspace());
  Vec final_a =
      std::move(run_custom(emb, std::move(init_a), total_a, x_pos_a, y_pos_a, tx + ty, false).back());

  // run B: the base protocol on [XS YS Xout RXout Yout RYout pW]
  const int pw = p.workspace_width();
  const int total_b = tx + ty + 2 * ox + 2 * oy + pw;
  Vec init_b = tensor_product(
      tensor_product(tensor_product(sigma, pair_state(spec.mu1, o, spec.xc)),
                     pair_state(spec.mu2, o, spec.yc)),
      p.initial_workspace());
  std::vector<int> x_pos_b(p.x_bits), y_pos_b(p.y_bits);
  {
    // positions, coordinate order: inside coords sit in XS, outside in Xout
    int si = 0, oi = 0;
    for (int c = 0; c < m; ++c) {
      const bool inside = (si < t && coords[si] == c);
      for (int bx = 0; bx < spec.xc; ++bx) {
        if (inside)
          x_pos_b[c * spec.xc + bx] = si * spec.xc + bx;
        else
          x_pos_b[c * spec.xc + bx] = tx + ty + oi * spec.xc + bx;
      }
      if (inside) ++si;
      else ++oi;
    }
    si = oi = 0;
    for (int c = 0; c < m; ++c) {
      const bool inside = (si < t && coords[si] == c);
      for (int by = 0; by < spec.yc; ++by) {
        if (inside)
          y_pos_b[c * spec.yc + by] = tx + si * spec.yc + by;
        else
          y_pos_b[c * spec.yc + by] = tx + ty + 2 * ox + oi * spec.yc + by;
      }
      if (inside) ++si;
      else ++oi;
    }
  }
  Vec final_b = std::move(run_custom(p, std::move(init_b), total_b, x_pos_b, y_pos_b,
                                     tx + ty + 2 * ox + 2 * oy, false)
                              .back());

  // align run B's qubits with run A's order:
  // A: [XS YS | Xout RXout pW Yout RYout]
  // B: [XS YS | Xout RXout Yout RYout pW]
  std::vector<int> new_from_old(total_a);
  int q = 0;
  for (int i = 0; i < tx + ty; ++i) new_from_old[q++] = i;
  for (int i = 0; i < 2 * ox; ++i) new_from_old[q++] = tx + ty + i;
  for (int i = 0; i < pw; ++i) new_from_old[q++] = tx + ty + 2 * ox + 2 * oy + i;
  for (int i = 0; i < 2 * oy; ++i) new_from_old[q++] = tx + ty + 2 * ox + i;
  Vec aligned = permute_qubits(final_b, total_b, new_from_old);

  const double overlap = std::abs(final_a.dot(aligned));
  return std::abs(1.0 - overlap);
}

}  // namespace iclab
