#include "qaoa/schedule.hpp"

#include <stdexcept>
#include <utility>

namespace qaoa {

AngleSchedule::AngleSchedule(Convention conv, std::vector<double> g, std::vector<double> b)
    : convention(conv), gammas(std::move(g)), betas(std::move(b)) {
  if (gammas.size() != betas.size())
    throw std::invalid_argument("angle schedule needs equally many gammas and betas");
}

AngleSchedule AngleSchedule::maxcut(std::vector<double> g, std::vector<double> b) {
  return AngleSchedule(Convention::MaxCut, std::move(g), std::move(b));
}

AngleSchedule AngleSchedule::ring(std::vector<double> g, std::vector<double> b) {
  return AngleSchedule(Convention::Ring, std::move(g), std::move(b));
}

}  // namespace qaoa
