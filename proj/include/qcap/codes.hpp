#pragma once

#include <cstdint>

namespace qcap::codes {

/// Surface-code model input. Valid only below threshold: 100 * physical_error < 1.
struct SurfaceCodeParams {
    double physical_error = 1e-3; // epsilon_P in (0, 1)
};

/// Cat-qubit repetition-code model input.
struct CatCodeParams {
    double nbar = 11.0;       // mean photon number
    double loss_ratio = 1e-4; // k1/k2
};

enum class CodeScheme { Surface, RepetitionCat, QldpcScaled };

/// One of the three QEC schemes used by the capability model. qldpc_scaled
/// keeps the surface-code error formula but divides the qubit ratio.
struct CodeModel {
    CodeScheme scheme = CodeScheme::Surface;
    SurfaceCodeParams surface_params{};
    CatCodeParams cat_params{};
    double ratio_divisor = 10.0; // QldpcScaled only

    static CodeModel surface(SurfaceCodeParams p) { return {CodeScheme::Surface, p, {}, 10.0}; }
    static CodeModel repetition_cat(CatCodeParams p = {}) {
        return {CodeScheme::RepetitionCat, {}, p, 10.0};
    }
    static CodeModel qldpc_scaled(SurfaceCodeParams p, double divisor = 10.0) {
        return {CodeScheme::QldpcScaled, p, {}, divisor};
    }
};

// Distance scan cap; beyond this the models extrapolate into noise.
inline constexpr int kMaxScanDistance = 1001;

/// Logical error rate 0.1 * (100 * eps_P)^((d+1)/2). Accepts any d >= 1,
/// even values included (the extended-capability model evaluates d+5).
/// Throws AboveThreshold when 100 * eps_P >= 1.
double surface_logical_error(const SurfaceCodeParams& p, int distance);

/// Logical phase-flip rate of the cat repetition code,
/// 0.056 * (nbar^0.86 * loss_ratio / 0.013)^((d+1)/2) + (d-1) * e^(-2*nbar).
/// Throws Divergent when the suppression base is >= 1. The logical bit-flip
/// rate is below 1e-9 at the default nbar and is not modeled.
double cat_logical_error(const CatCodeParams& p, int distance);

/// Logical error of the model's scheme at the given distance.
double logical_error(const CodeModel& code, int distance);

/// Physical qubits per logical qubit: surface 2d^2-1, repetition 2d-1,
/// qldpc_scaled (2d^2-1)/ratio_divisor.
double physical_per_logical(const CodeModel& code, int distance);

// Target comparisons in the distance solver allow this relative slack so
// exact-boundary cases (0.1 * 0.1^5 vs 1e-6) resolve as the algebra does.
inline constexpr double kTargetSlack = 1e-9;

/// Smallest odd d >= 3 with logical_error(code, d) <= target. Scan capped
/// at kMaxScanDistance; throws NoConvergence past the cap or above threshold.
int min_distance(const CodeModel& code, double target_logical_error);

/// floor(n_physical / (overhead * physical_per_logical at the solved distance)).
/// overhead >= 1 covers routing/factory qubits.
std::int64_t infer_logical_count(std::int64_t n_physical, const CodeModel& code,
                                 double target_logical_error, double overhead = 1.0);

/// ceil(n_logical * overhead * physical_per_logical at the solved distance).
std::int64_t infer_physical_count(std::int64_t n_logical, const CodeModel& code,
                                  double target_logical_error, double overhead = 1.0);

} // namespace qcap::codes
