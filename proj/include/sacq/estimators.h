// Copyright 2026 The sacq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SACQ_ESTIMATORS_H
#define SACQ_ESTIMATORS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sacq/boolfn.h"
#include "sacq/circuits.h"

namespace sacq {

/// Which Hoeffding sample-size formula applies.
enum class SampleVariant {
    /// One-qubit readout (QSAC and the autocorrelation estimator): (1/2t^2) ln(2/delta).
    Qsac,
    /// Classical bias estimate in [-2^n, 2^n]: (2^n/t^2) ln(2/delta), as tabulated.
    Classical,
    /// n-qubit readout (direct, forrelation): ((2^n-1)/2t^2) ln(2/delta).
    NQubit,
};

const char *variant_name(SampleVariant v);
SampleVariant sample_variant(Algorithm a);

/// Unrounded formula value. Natural logarithm throughout.
double sample_formula(double t, double delta, SampleVariant variant, int n);
/// ceil(sample_formula(...)).
std::uint64_t plan_samples(double t, double delta, SampleVariant variant, int n);

/// Throws std::invalid_argument unless t > 0 and 0 < delta < 1.
void check_margin(double t, double delta);

/// Half-width t solving 2 exp(-2 m t^2 / w^2) = delta, i.e. w sqrt(ln(2/delta) / 2m).
double hoeffding_halfwidth(std::uint64_t m, double delta, double range_width);

struct Interval {
    double lo;
    double hi;

    bool contains(double v) const {
        return lo <= v && v <= hi;
    }
};

Interval confidence_interval(double mean, std::uint64_t m, double delta, double range_width);

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Qsac;
    /// Margin of error: probability units for quantum variants, bias units for classical.
    double t = 0.05;
    double delta = 0.05;
    /// Explicit sample count m. When absent, m = plan_samples(t, delta, ...).
    std::optional<std::uint64_t> samples;
    /// Classical: sweep all 2^n inputs. Quantum: read the exact distribution.
    bool exhaustive = false;
    std::uint64_t seed = 0;

    void validate() const;
    /// m actually used for a function of n variables (2^n for exhaustive classical, 0 for exact quantum).
    std::uint64_t resolved_samples(int n) const;
};

struct DirectionEstimate {
    int coordinate;
    Vec direction;
    /// Classical: s. QSAC: X^i (fraction of outcome 1). Direct/forrelation: fraction of 0_n.
    double sample_mean;
    /// Hoeffding interval. Classical: on the bias 2^n s (bias units, like cfg.t).
    /// Quantum: on the sampled probability.
    Interval interval;
    /// Classical: 2^n s (signed). Quantum: magnitude of the bias, 2^n |1 - 2X^i| for QSAC.
    double bias_estimate;
    /// Interval on |f~(e_i)| implied by `interval`, clamped to [0, 2^n].
    Interval abs_bias_interval;
};

struct EstimateReport {
    Algorithm algorithm;
    int n;
    std::uint64_t samples;
    bool exhaustive;
    std::uint64_t seed;
    double t;
    double delta;
    std::vector<DirectionEstimate> directions;
    /// Half the sum of |bias_estimate|.
    double epsilon_estimate;
    /// Per-direction intervals propagated by summation (each holds at 1-delta; jointly at 1-n*delta).
    Interval epsilon_interval;
    /// Standard Hoeffding half-width of each per-direction interval (0 in exhaustive/exact mode).
    double halfwidth;
    /// Classical only: half-width from the tabulated (unsquared-range) exponent.
    std::optional<double> tabulated_halfwidth;
    /// Oracle calls across all directions and shots (0 in exact quantum mode).
    std::uint64_t oracle_calls;
    /// Whether every direction is consistent with an exactly SAC function.
    bool sac_consistent;
    /// Forrelation sampled mode resolves Phi = +sqrt(Pr[0_n]); noted here.
    std::optional<std::string> note;
};

/// Monte-Carlo estimate of every weight-1 autocorrelation from uniform samples.
EstimateReport classical_estimate(const BooleanFunction &f, const ExperimentConfig &cfg);
/// Shot-based estimate from the QSAC target-qubit readout.
EstimateReport qsac_estimate(const BooleanFunction &f, const ExperimentConfig &cfg);
/// Estimate from the probability of reading 0_n after the derivative Deutsch-Jozsa circuit.
EstimateReport direct_estimate(const BooleanFunction &f, const ExperimentConfig &cfg);
/// Estimate from the probability of reading 0_n after the 3-fold Forrelation circuit.
EstimateReport forrelation_estimate(const BooleanFunction &f, const ExperimentConfig &cfg);

/// Dispatches on cfg.algorithm.
EstimateReport estimate(const BooleanFunction &f, const ExperimentConfig &cfg);

/// Ceiling on n for the quantum estimators.
inline constexpr int kMaxSimulatedVars = 14;

}  // namespace sacq

#endif
