#pragma once

#include <cstdint>
#include <optional>

#include "qcap/model.hpp"

namespace qcap::estimators {

/// Inputs for the collective neutrino-oscillation Trotter estimator. The
/// big-O constant is pinned to 1 by default, so outputs are conservative
/// bounds rather than tight counts.
struct NeutrinoParams {
    std::int64_t n_modes = 10;            // N
    double error_budget = 0.01;           // total error for the evolution
    double coupling = 1.0;                // two-body interaction strength mu
    std::optional<double> sim_time;       // defaults to 1/mu
    std::optional<double> freq_spread;    // defaults to 100*mu
    double constant = 1.0;

    double time() const { return sim_time.value_or(1.0 / coupling); }
    double spread() const { return freq_spread.value_or(100.0 * coupling); }
};

/// ceil(c * t^2 * mu * N * (spread + mu) / error_budget).
std::int64_t trotter_steps(const NeutrinoParams& p);

/// T gates per Trotter step: 50 * (N + N*(N-1)/2) = 25 * N * (N+1).
std::int64_t gates_per_step(std::int64_t n_modes);

/// P-vector of the full evolution, one qubit per neutrino mode.
PVector neutrino_pvector(const NeutrinoParams& p);

} // namespace qcap::estimators
