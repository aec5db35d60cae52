#include "qaoa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qaoa {

namespace {

// 53-bit uniform in [0, 1); bit-reproducible across platforms, unlike
// std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double cost_eigenvalue(Convention conv, int n_edges, std::int32_t cut) {
  if (conv == Convention::MaxCut) return static_cast<double>(cut);
  return static_cast<double>(n_edges) - 2.0 * static_cast<double>(cut);
}

}  // namespace

int cut_value(const Graph& g, std::uint64_t bits) {
  int c = 0;
  for (const auto& [u, v] : g.edges())
    c += static_cast<int>(((bits >> u) ^ (bits >> v)) & 1u);
  return c;
}

StateVectorSim::StateVectorSim(Graph g, Convention conv, int qubit_cap)
    : graph_(std::move(g)), conv_(conv), n_(graph_.n_vertices()) {
  if (qubit_cap < 1 || qubit_cap > kHardQubitCap)
    throw std::invalid_argument("qubit cap must be in [1, " +
                                std::to_string(kHardQubitCap) + "]");
  if (n_ > qubit_cap)
    throw std::invalid_argument("graph has " + std::to_string(n_) +
                                " vertices, exceeding the qubit cap " + std::to_string(qubit_cap));

  const std::size_t dim = std::size_t{1} << n_;
  cut_.resize(dim);
  for (std::size_t x = 0; x < dim; ++x) cut_[x] = cut_value(graph_, x);
  reset();
}

void StateVectorSim::reset() {
  const std::size_t dim = std::size_t{1} << n_;
  amp_.assign(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

void StateVectorSim::apply_cost_layer(double gamma) {
  // H_C is diagonal; one phase per distinct cut count.
  const int m = graph_.n_edges();
  std::vector<std::complex<double>> phase(m + 1);
  for (int c = 0; c <= m; ++c)
    phase[c] = std::polar(1.0, -gamma * cost_eigenvalue(conv_, m, c));
  for (std::size_t x = 0; x < amp_.size(); ++x) amp_[x] *= phase[cut_[x]];
}

void StateVectorSim::apply_mixer_layer(double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::complex<double> mis(0.0, -s);
  const std::size_t dim = amp_.size();
  for (int j = 0; j < n_; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
      for (std::size_t x = base; x < base + bit; ++x) {
        const std::complex<double> a0 = amp_[x];
        const std::complex<double> a1 = amp_[x | bit];
        amp_[x] = c * a0 + mis * a1;
        amp_[x | bit] = mis * a0 + c * a1;
      }
    }
  }
}

void StateVectorSim::run(const AngleSchedule& sched) {
  if (sched.convention != conv_)
    throw std::invalid_argument("schedule convention does not match the simulator");
  reset();
  for (int l = 0; l < sched.p(); ++l) {
    apply_cost_layer(sched.gammas[l]);
    apply_mixer_layer(sched.betas[l]);
  }
}

double StateVectorSim::expectation() const {
  const int m = graph_.n_edges();
  double total = 0.0;
  for (std::size_t x = 0; x < amp_.size(); ++x)
    total += std::norm(amp_[x]) * cost_eigenvalue(conv_, m, cut_[x]);
  return total;
}

double StateVectorSim::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amp_) total += std::norm(a);
  return total;
}

std::vector<double> StateVectorSim::edge_cut_probabilities() const {
  std::vector<double> probs(graph_.n_edges(), 0.0);
  const auto& edges = graph_.edges();
  for (std::size_t x = 0; x < amp_.size(); ++x) {
    const double w = std::norm(amp_[x]);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (((x >> edges[e].first) ^ (x >> edges[e].second)) & 1u) probs[e] += w;
  }
  return probs;
}

std::vector<Sample> StateVectorSim::sample(int count, std::uint64_t seed) const {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<double> cdf(amp_.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < amp_.size(); ++x) {
    acc += std::norm(amp_[x]);
    cdf[x] = acc;
  }
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::uint64_t bits = static_cast<std::uint64_t>(it - cdf.begin());
    out.push_back(Sample{bits, cut_[bits]});
  }
  return out;
}

double simulate_expectation(const Graph& g, const AngleSchedule& sched, int qubit_cap) {
  StateVectorSim sim(g, sched.convention, qubit_cap);
  sim.run(sched);
  return sim.expectation();
}

std::vector<Sample> sample_bitstrings(const Graph& g, const AngleSchedule& sched, int count,
                                      std::uint64_t seed, int qubit_cap) {
  StateVectorSim sim(g, sched.convention, qubit_cap);
  sim.run(sched);
  return sim.sample(count, seed);
}

MaxCutSolution maxcut_bruteforce(const Graph& g) {
  const int n = g.n_vertices();
  if (n > kBruteForceQubitCap)
    throw std::invalid_argument("brute-force MaxCut capped at " +
                                std::to_string(kBruteForceQubitCap) + " vertices");
  MaxCutSolution best{-1, 0};
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < dim; ++x) {
    const int c = cut_value(g, x);
    if (c > best.c_max) {
      best.c_max = c;
      best.bits = x;
    }
  }
  return best;
}

}  // namespace qaoa
