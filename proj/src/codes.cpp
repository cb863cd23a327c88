#include "qcap/codes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcap/errors.hpp"

namespace qcap::codes {

namespace {

void check_distance(int distance) {
    if (distance < 1)
        throw std::invalid_argument("distance must be >= 1");
}

bool meets_target(double error, double target) {
    return error <= target * (1.0 + kTargetSlack);
}

// floor/ceil with a 1-ulp-scale guard so products that are integers in exact
// arithmetic (200 * 337/10) do not round an extra step
std::int64_t guarded_floor(double x) {
    return static_cast<std::int64_t>(std::floor(x + std::abs(x) * 1e-12));
}

std::int64_t guarded_ceil(double x) {
    return static_cast<std::int64_t>(std::ceil(x - std::abs(x) * 1e-12));
}

} // namespace

double surface_logical_error(const SurfaceCodeParams& p, int distance) {
    check_distance(distance);
    const double base = 100.0 * p.physical_error;
    if (!(p.physical_error > 0.0) || p.physical_error >= 1.0)
        throw std::invalid_argument("physical_error must be in (0, 1)");
    if (base >= 1.0)
        throw AboveThreshold("physical error " + std::to_string(p.physical_error) +
                             " is at or above the surface-code threshold");
    return 0.1 * std::pow(base, 0.5 * (distance + 1));
}

double cat_logical_error(const CatCodeParams& p, int distance) {
    check_distance(distance);
    if (!(p.nbar > 0.0) || !(p.loss_ratio > 0.0))
        throw std::invalid_argument("cat parameters must be positive");
    const double base = std::pow(p.nbar, 0.86) * p.loss_ratio / 0.013;
    if (base >= 1.0)
        throw Divergent("cat-code suppression base " + std::to_string(base) +
                        " does not suppress phase flips");
    const double phase = 0.056 * std::pow(base, 0.5 * (distance + 1));
    const double bitflip_floor = (distance - 1) * std::exp(-2.0 * p.nbar);
    return phase + bitflip_floor;
}

double logical_error(const CodeModel& code, int distance) {
    switch (code.scheme) {
    case CodeScheme::Surface:
    case CodeScheme::QldpcScaled:
        return surface_logical_error(code.surface_params, distance);
    case CodeScheme::RepetitionCat:
        return cat_logical_error(code.cat_params, distance);
    }
    throw std::logic_error("unknown code scheme");
}

double physical_per_logical(const CodeModel& code, int distance) {
    check_distance(distance);
    const double d = distance;
    switch (code.scheme) {
    case CodeScheme::Surface:
        return 2.0 * d * d - 1.0;
    case CodeScheme::RepetitionCat:
        return 2.0 * d - 1.0;
    case CodeScheme::QldpcScaled:
        if (!(code.ratio_divisor > 0.0))
            throw std::invalid_argument("ratio_divisor must be positive");
        return (2.0 * d * d - 1.0) / code.ratio_divisor;
    }
    throw std::logic_error("unknown code scheme");
}

int min_distance(const CodeModel& code, double target_logical_error) {
    if (!(target_logical_error > 0.0) || target_logical_error >= 1.0)
        throw std::invalid_argument("target logical error must be in (0, 1)");
    for (int d = 3; d <= kMaxScanDistance; d += 2) {
        double err;
        try {
            err = logical_error(code, d);
        } catch (const AboveThreshold&) {
            throw NoConvergence("code is above threshold; logical error never decreases");
        } catch (const Divergent&) {
            throw NoConvergence("cat code does not suppress; logical error never decreases");
        }
        if (meets_target(err, target_logical_error))
            return d;
    }
    throw NoConvergence("no odd distance <= " + std::to_string(kMaxScanDistance) +
                        " reaches logical error " + std::to_string(target_logical_error));
}

std::int64_t infer_logical_count(std::int64_t n_physical, const CodeModel& code,
                                 double target_logical_error, double overhead) {
    if (n_physical < 1)
        throw std::invalid_argument("n_physical must be >= 1");
    if (overhead < 1.0)
        throw std::invalid_argument("overhead must be >= 1");
    const int d = min_distance(code, target_logical_error);
    const double per_logical = overhead * physical_per_logical(code, d);
    return guarded_floor(static_cast<double>(n_physical) / per_logical);
}

std::int64_t infer_physical_count(std::int64_t n_logical, const CodeModel& code,
                                  double target_logical_error, double overhead) {
    if (n_logical < 1)
        throw std::invalid_argument("n_logical must be >= 1");
    if (overhead < 1.0)
        throw std::invalid_argument("overhead must be >= 1");
    const int d = min_distance(code, target_logical_error);
    const double per_logical = overhead * physical_per_logical(code, d);
    return guarded_ceil(static_cast<double>(n_logical) * per_logical);
}

} // namespace qcap::codes
