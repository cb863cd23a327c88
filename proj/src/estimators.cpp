#include "qcap/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace qcap::estimators {

namespace {

void check_params(const NeutrinoParams& p) {
    if (p.n_modes < 1)
        throw std::invalid_argument("n_modes must be >= 1");
    if (!(p.error_budget > 0.0))
        throw std::invalid_argument("error_budget must be positive");
    if (!(p.coupling > 0.0) || !(p.time() > 0.0) || !(p.spread() > 0.0) || !(p.constant > 0.0))
        throw std::invalid_argument("coupling, time, spread and constant must be positive");
}

} // namespace

std::int64_t trotter_steps(const NeutrinoParams& p) {
    check_params(p);
    const double t = p.time();
    const double raw = p.constant * t * t * p.coupling * static_cast<double>(p.n_modes) *
                       (p.spread() + p.coupling) / p.error_budget;
    return static_cast<std::int64_t>(std::ceil(raw));
}

std::int64_t gates_per_step(std::int64_t n_modes) {
    if (n_modes < 1)
        throw std::invalid_argument("n_modes must be >= 1");
    return 25 * n_modes * (n_modes + 1);
}

PVector neutrino_pvector(const NeutrinoParams& p) {
    const double gates = static_cast<double>(trotter_steps(p)) *
                         static_cast<double>(gates_per_step(p.n_modes));
    return PVector(p.n_modes, gates);
}

} // namespace qcap::estimators
