#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qaoa/graph.hpp"
#include "qaoa/schedule.hpp"

namespace qaoa {

inline constexpr int kDefaultQubitCap = 22;
inline constexpr int kHardQubitCap = 26;
inline constexpr int kBruteForceQubitCap = 24;

/// Name of the PRNG used for bitstring sampling, recorded in CLI manifests.
inline constexpr const char* kSamplerPrngName = "mt19937_64";

struct Sample {
  std::uint64_t bits = 0;  // vertex j <-> bit j
  int cut_value = 0;
};

struct MaxCutSolution {
  long long c_max = 0;
  std::uint64_t bits = 0;  // smallest maximizing bitstring
};

/// Number of edges of g cut by the partition encoded in `bits`.
int cut_value(const Graph& g, std::uint64_t bits);

/// Brute-force 2^n state-vector simulator of the alternating circuit
/// U_B(beta_p) U_C(gamma_p) ... U_B(beta_1) U_C(gamma_1) |+>^n. This is the
/// ground-truth oracle the analytic modules are tested against. Amplitudes
/// use little-endian qubit indexing (qubit j is bit j of the basis index).
class StateVectorSim {
 public:
  StateVectorSim(Graph g, Convention conv, int qubit_cap = kDefaultQubitCap);

  void reset();
  void apply_cost_layer(double gamma);
  void apply_mixer_layer(double beta);
  /// reset() followed by the p layers of `sched` (whose convention must match).
  void run(const AngleSchedule& sched);

  /// <H_C> in the active convention: cut count for MaxCut, sum of z z for Ring.
  double expectation() const;
  double norm_squared() const;
  /// Per-edge probability that the edge is cut, in edge-list order.
  std::vector<double> edge_cut_probabilities() const;
  /// count i.i.d. draws from |psi|^2, deterministic for a fixed seed.
  std::vector<Sample> sample(int count, std::uint64_t seed) const;

  int n_qubits() const noexcept { return n_; }
  Convention convention() const noexcept { return conv_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept { return amp_; }
  const Graph& graph() const noexcept { return graph_; }

 private:
  Graph graph_;
  Convention conv_;
  int n_ = 0;
  std::vector<std::int32_t> cut_;             // cut count per basis state
  std::vector<std::complex<double>> amp_;
};

double simulate_expectation(const Graph& g, const AngleSchedule& sched,
                            int qubit_cap = kDefaultQubitCap);

std::vector<Sample> sample_bitstrings(const Graph& g, const AngleSchedule& sched, int count,
                                      std::uint64_t seed, int qubit_cap = kDefaultQubitCap);

/// Exhaustive MaxCut maximum; ties broken by smallest bitstring value.
MaxCutSolution maxcut_bruteforce(const Graph& g);

}  // namespace qaoa
