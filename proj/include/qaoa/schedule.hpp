#pragma once

#include <vector>

namespace qaoa {

/// Hamiltonian convention an angle schedule refers to.
///   MaxCut: H_C counts cut edges, maximized, U_C = exp(-i gamma H_C).
///   Ring:   H_C = sum of sigma^z sigma^z couplings, minimized; this is the
///           rescaled form the pseudospin reduction works in.
enum class Convention { MaxCut, Ring };

/// The 2p parameters of a level-p circuit: (gamma_1..gamma_p, beta_1..beta_p)
/// in radians. p = 0 (identity circuit) is valid.
struct AngleSchedule {
  Convention convention = Convention::MaxCut;
  std::vector<double> gammas;
  std::vector<double> betas;

  AngleSchedule() = default;
  AngleSchedule(Convention conv, std::vector<double> g, std::vector<double> b);

  int p() const noexcept { return static_cast<int>(gammas.size()); }

  static AngleSchedule maxcut(std::vector<double> g, std::vector<double> b);
  static AngleSchedule ring(std::vector<double> g, std::vector<double> b);
};

}  // namespace qaoa
