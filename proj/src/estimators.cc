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

#include "sacq/estimators.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sacq/errors.h"
#include "sacq/rng.h"

namespace sacq {

const char *variant_name(SampleVariant v) {
    switch (v) {
        case SampleVariant::Qsac:
            return "qsac";
        case SampleVariant::Classical:
            return "classical";
        case SampleVariant::NQubit:
            return "nqubit";
    }
    return "?";
}

SampleVariant sample_variant(Algorithm a) {
    switch (a) {
        case Algorithm::Classical:
            return SampleVariant::Classical;
        case Algorithm::Qsac:
            return SampleVariant::Qsac;
        case Algorithm::Direct:
        case Algorithm::Forrelation:
            return SampleVariant::NQubit;
    }
    throw std::invalid_argument("unknown algorithm");
}

void check_margin(double t, double delta) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("margin t must be positive");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("uncertainty delta must lie strictly between 0 and 1");
    }
}

double sample_formula(double t, double delta, SampleVariant variant, int n) {
    check_margin(t, delta);
    if (n < 1 || n > 62) {
        throw std::invalid_argument("variable count out of range for sample planning");
    }
    const double log_term = std::log(2.0 / delta);
    const double pow2 = std::ldexp(1.0, n);
    switch (variant) {
        case SampleVariant::Qsac:
            return log_term / (2.0 * t * t);
        case SampleVariant::Classical:
            return pow2 * log_term / (t * t);
        case SampleVariant::NQubit:
            return (pow2 - 1.0) * log_term / (2.0 * t * t);
    }
    throw std::invalid_argument("unknown sample variant");
}

std::uint64_t plan_samples(double t, double delta, SampleVariant variant, int n) {
    double m = std::ceil(sample_formula(t, delta, variant, n));
    if (m > 1e18) {
        throw SizeLimitError("planned sample count overflows");
    }
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(m));
}

double hoeffding_halfwidth(std::uint64_t m, double delta, double range_width) {
    if (m == 0) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("uncertainty delta must lie strictly between 0 and 1");
    }
    if (!(range_width > 0.0)) {
        throw std::invalid_argument("range width must be positive");
    }
    return range_width * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(m)));
}

Interval confidence_interval(double mean, std::uint64_t m, double delta, double range_width) {
    double h = hoeffding_halfwidth(m, delta, range_width);
    return {mean - h, mean + h};
}

void ExperimentConfig::validate() const {
    check_margin(t, delta);
    if (samples.has_value() && *samples == 0) {
        throw std::invalid_argument("sample count must be at least 1");
    }
}

std::uint64_t ExperimentConfig::resolved_samples(int n) const {
    if (exhaustive) {
        return algorithm == Algorithm::Classical ? (std::uint64_t{1} << n) : 0;
    }
    if (samples.has_value()) {
        return *samples;
    }
    return plan_samples(t, delta, sample_variant(algorithm), n);
}

namespace {

constexpr double kExactTolerance = 1e-6;

/// |v| over v in [lo, hi], clamped to [0, cap].
Interval abs_range(Interval v, double cap) {
    double a = std::abs(v.lo);
    double b = std::abs(v.hi);
    double lo = (v.lo <= 0.0 && v.hi >= 0.0) ? 0.0 : std::min(a, b);
    double hi = std::max(a, b);
    return {std::clamp(lo, 0.0, cap), std::clamp(hi, 0.0, cap)};
}

Interval clamp01(Interval v) {
    return {std::clamp(v.lo, 0.0, 1.0), std::clamp(v.hi, 0.0, 1.0)};
}

/// In exact mode a bias magnitude must be an integer; snap it and fail loudly otherwise.
double snap_integer(double v) {
    double r = std::round(v);
    if (std::abs(v - r) > kExactTolerance) {
        throw InvariantError("exact-mode bias is not an integer");
    }
    return r;
}

EstimateReport start_report(const BooleanFunction &f, const ExperimentConfig &cfg, Algorithm expected) {
    if (cfg.algorithm != expected) {
        throw std::invalid_argument(std::string("config algorithm is ") + algorithm_name(cfg.algorithm) +
                                    ", expected " + algorithm_name(expected));
    }
    cfg.validate();
    if (expected != Algorithm::Classical && f.num_vars() > kMaxSimulatedVars) {
        throw SizeLimitError("quantum estimators simulate at most n=" + std::to_string(kMaxSimulatedVars));
    }
    EstimateReport r{};
    r.algorithm = cfg.algorithm;
    r.n = f.num_vars();
    r.samples = cfg.resolved_samples(f.num_vars());
    r.exhaustive = cfg.exhaustive;
    r.seed = cfg.seed;
    r.t = cfg.t;
    r.delta = cfg.delta;
    r.sac_consistent = true;
    return r;
}

void finish_report(EstimateReport &r) {
    double sum = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    for (const auto &d : r.directions) {
        sum += std::abs(d.bias_estimate);
        lo += d.abs_bias_interval.lo;
        hi += d.abs_bias_interval.hi;
    }
    r.epsilon_estimate = sum / 2.0;
    r.epsilon_interval = {lo / 2.0, hi / 2.0};
}

}  // namespace

EstimateReport classical_estimate(const BooleanFunction &f, const ExperimentConfig &cfg) {
    EstimateReport r = start_report(f, cfg, Algorithm::Classical);
    const int n = f.num_vars();
    const double scale = std::ldexp(1.0, n);
    const std::uint64_t m = r.samples;
    if (!cfg.exhaustive) {
        r.halfwidth = hoeffding_halfwidth(m, cfg.delta, 2.0 * scale);
        r.tabulated_halfwidth = std::sqrt(scale * std::log(2.0 / cfg.delta) / static_cast<double>(m));
    }
    r.oracle_calls = 2 * m * static_cast<std::uint64_t>(n);

    for (int i = 1; i <= n; ++i) {
        const Vec a = unit_direction(n, i);
        std::int64_t total = 0;
        if (cfg.exhaustive) {
            for (Vec x = 0; x < f.size(); ++x) {
                total += f.character(x) * f.character(x ^ a);
            }
        } else {
            Prng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            for (std::uint64_t k = 0; k < m; ++k) {
                Vec x = uniform_bits(rng, n);
                total += f.character(x) * f.character(x ^ a);
            }
        }
        const double s = static_cast<double>(total) / static_cast<double>(m);
        const double bias = std::ldexp(static_cast<double>(total), n) / static_cast<double>(m);
        Interval iv{bias - r.halfwidth, bias + r.halfwidth};
        r.directions.push_back(DirectionEstimate{i, a, s, iv, bias, abs_range(iv, scale)});
        if (!iv.contains(0.0)) {
            r.sac_consistent = false;
        }
    }
    finish_report(r);
    return r;
}

EstimateReport qsac_estimate(const BooleanFunction &f, const ExperimentConfig &cfg) {
    EstimateReport r = start_report(f, cfg, Algorithm::Qsac);
    const int n = f.num_vars();
    const double scale = std::ldexp(1.0, n);
    const std::uint64_t m = r.samples;
    if (!cfg.exhaustive) {
        r.halfwidth = hoeffding_halfwidth(m, cfg.delta, 1.0);
    }
    r.oracle_calls = m * static_cast<std::uint64_t>(n);

    for (int i = 1; i <= n; ++i) {
        CircuitResult cr = qsac_iteration(f, i);
        double mean;
        double bias;
        if (cfg.exhaustive) {
            mean = cr.exact[1];
            bias = snap_integer(scale * std::abs(cr.exact[0] - cr.exact[1]));
            if (std::abs(mean - 0.5) > 1e-12) {
                r.sac_consistent = false;
            }
        } else {
            attach_samples(cr, m, split_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            const std::uint64_t ones = cr.counts->counts[1];
            mean = static_cast<double>(ones) / static_cast<double>(m);
            const double diff = std::abs(static_cast<double>(m) - 2.0 * static_cast<double>(ones));
            bias = std::ldexp(diff, n) / static_cast<double>(m);
        }
        Interval iv = clamp01({mean - r.halfwidth, mean + r.halfwidth});
        if (!cfg.exhaustive && !iv.contains(0.5)) {
            r.sac_consistent = false;
        }
        Interval centred{1.0 - 2.0 * iv.hi, 1.0 - 2.0 * iv.lo};
        Interval abs_iv = abs_range(centred, 1.0);
        abs_iv = {abs_iv.lo * scale, abs_iv.hi * scale};
        r.directions.push_back(DirectionEstimate{i, unit_direction(n, i), mean, iv, bias, abs_iv});
    }
    finish_report(r);
    return r;
}

namespace {

/// Shared body of the two n-qubit-readout estimators. `to_bias` maps a
/// probability of 0_n to a bias magnitude and must be monotone.
template <typename ToBias>
void zero_outcome_directions(
    EstimateReport &r, const BooleanFunction &f, const ExperimentConfig &cfg, Algorithm algorithm, ToBias to_bias) {
    const int n = f.num_vars();
    const std::uint64_t m = r.samples;
    if (!cfg.exhaustive) {
        r.halfwidth = hoeffding_halfwidth(m, cfg.delta, 1.0);
    }
    for (int i = 1; i <= n; ++i) {
        CircuitResult cr = run_iteration(algorithm, f, i);
        double mean;
        double bias;
        std::uint64_t zeros = 0;
        if (cfg.exhaustive) {
            mean = cr.exact[0];
            bias = snap_integer(to_bias(mean, cr.zero_amplitude->real()));
        } else {
            attach_samples(cr, m, split_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            zeros = cr.counts->counts[0];
            mean = static_cast<double>(zeros) / static_cast<double>(m);
            bias = to_bias(mean, std::sqrt(mean));
        }
        Interval iv = clamp01({mean - r.halfwidth, mean + r.halfwidth});
        double b_lo = to_bias(iv.lo, std::sqrt(iv.lo));
        double b_hi = to_bias(iv.hi, std::sqrt(iv.hi));
        Interval abs_iv{std::min(b_lo, b_hi), std::max(b_lo, b_hi)};
        if (cfg.exhaustive) {
            abs_iv = {bias, bias};
        }
        r.directions.push_back(DirectionEstimate{i, unit_direction(n, i), mean, iv, bias, abs_iv});

        const bool consistent = algorithm == Algorithm::Direct
                                    ? (cfg.exhaustive ? mean <= 1e-12 : zeros == 0)
                                    : (cfg.exhaustive ? cr.zero_amplitude->real() >= 1.0 - 1e-9 : zeros == m);
        if (!consistent) {
            r.sac_consistent = false;
        }
    }
}

}  // namespace

EstimateReport direct_estimate(const BooleanFunction &f, const ExperimentConfig &cfg) {
    EstimateReport r = start_report(f, cfg, Algorithm::Direct);
    const double scale = std::ldexp(1.0, f.num_vars());
    r.oracle_calls = 2 * r.samples * static_cast<std::uint64_t>(f.num_vars());
    // Pr[0_n] = (f~(e_i) / 2^n)^2.
    zero_outcome_directions(r, f, cfg, Algorithm::Direct, [&](double p, double) {
        return scale * std::sqrt(std::max(p, 0.0));
    });
    finish_report(r);
    return r;
}

EstimateReport forrelation_estimate(const BooleanFunction &f, const ExperimentConfig &cfg) {
    EstimateReport r = start_report(f, cfg, Algorithm::Forrelation);
    const double scale = std::ldexp(1.0, f.num_vars());
    r.oracle_calls = 5 * r.samples * static_cast<std::uint64_t>(f.num_vars());
    // Phi = 1 - 2 g^(0)^2 with g^(0) = f~(e_i) / 2^n. Sampling only reveals
    // Phi^2, so the sampled path takes the Phi >= 0 root.
    zero_outcome_directions(r, f, cfg, Algorithm::Forrelation, [&](double, double phi) {
        return scale * std::sqrt(std::clamp((1.0 - phi) / 2.0, 0.0, 1.0));
    });
    if (!cfg.exhaustive) {
        r.note = "bias magnitudes assume Phi = +sqrt(Pr[0_n]); valid while |f~(e_i)| <= 2^n/sqrt(2)";
    }
    finish_report(r);
    return r;
}

EstimateReport estimate(const BooleanFunction &f, const ExperimentConfig &cfg) {
    switch (cfg.algorithm) {
        case Algorithm::Classical:
            return classical_estimate(f, cfg);
        case Algorithm::Qsac:
            return qsac_estimate(f, cfg);
        case Algorithm::Direct:
            return direct_estimate(f, cfg);
        case Algorithm::Forrelation:
            return forrelation_estimate(f, cfg);
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace sacq
