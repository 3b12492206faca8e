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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oracles.h"
#include "sacq/boolfn.h"
#include "sacq/circuits.h"
#include "sacq/complexity.h"
#include "sacq/estimators.h"
#include "sacq/report.h"

using namespace sacq;
using sacq::testing::brute_force_sac_distance;
using sacq::testing::direct_autocorrelation;
using sacq::testing::direct_walsh;
using sacq::testing::random_function;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string &name, double budget_seconds, const std::function<Outcome()> &body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(budget_seconds)) + " s budget)";
    }
    failures += !o.pass;
    std::printf("[%s] AC%d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::setprecision(3) << v;
    return ss.str();
}

/// Spectral mass of f with w_i = bit.
double spectral_mass(const std::vector<double> &s, int n, int i, int bit) {
    double acc = 0;
    for (Vec w = 0; w < s.size(); ++w) {
        if (static_cast<int>((w >> (n - i)) & 1) == bit) {
            acc += s[w] * s[w];
        }
    }
    return acc;
}

int run_cli(const std::string &args) {
    std::string cmd = std::string(SACQ_CLI_PATH) + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    criterion(1, "QSAC target distribution equals spectral halves, n=3 exhaustive", 10, [] {
        double worst = 0;
        int cases = 0;
        for (const auto &f : enumerate_functions(3)) {
            auto s = direct_walsh(f);
            for (int i = 1; i <= 3; ++i) {
                auto r = qsac_iteration(f, i);
                worst = std::max(worst, std::abs(r.exact[0] - spectral_mass(s, 3, i, 1)));
                worst = std::max(worst, std::abs(r.exact[1] - spectral_mass(s, 3, i, 0)));
                ++cases;
            }
        }
        return Outcome{worst <= 1e-12, std::to_string(cases) + " cases, max error " + fmt(worst) + " (tol 1e-12)"};
    });

    criterion(2, "transform autocorrelation equals defining sum", 30, [] {
        int mismatches = 0;
        int checked = 0;
        auto compare = [&](const BooleanFunction &f) {
            auto fast = autocorrelation_spectrum(f);
            auto slow = direct_autocorrelation(f);
            for (Vec a = 0; a < f.size(); ++a) {
                mismatches += fast[a] != slow[a];
            }
            ++checked;
        };
        for (const auto &f : enumerate_functions(3)) {
            compare(f);
        }
        std::mt19937_64 rng(20260101);
        for (int k = 0; k < 1000; ++k) {
            compare(random_function(8, rng));
        }
        return Outcome{mismatches == 0, std::to_string(checked) + " functions (256 at n=3, 1000 at n=8), " +
                                            std::to_string(mismatches) + " integer mismatches"};
    });

    criterion(3, "bent x1x2+x3x4 witness", 0, [] {
        auto f = parse_anf("x1*x2 + x3*x4");
        auto rep = sac_report(f);
        bool ok = rep.is_sac && rep.epsilon_exact == 0;
        double worst_qsac = 0;
        double worst_direct = 0;
        double min_forr = 1;
        for (int i = 1; i <= 4; ++i) {
            auto q = qsac_iteration(f, i);
            worst_qsac = std::max({worst_qsac, std::abs(q.exact[0] - 0.5), std::abs(q.exact[1] - 0.5)});
            worst_direct = std::max(worst_direct, direct_iteration(f, i).exact[0]);
            min_forr = std::min(min_forr, forrelation_iteration(f, i).exact[0]);
        }
        ok = ok && worst_qsac <= 1e-12 && worst_direct <= 1e-12 && min_forr >= 1 - 1e-9;
        return Outcome{ok, std::string("is_sac=") + (rep.is_sac ? "true" : "false") +
                               " eps=" + std::to_string(rep.epsilon_exact) + ", QSAC |p-0.5| max " + fmt(worst_qsac) +
                               ", direct Pr[0] max " + fmt(worst_direct) + " (tol 1e-12), forrelation Pr[0] min " +
                               fmt(min_forr) + " (tol 1-1e-9)"};
    });

    criterion(4, "forrelation circuit amplitude equals brute-force Phi", 0, [] {
        double worst = 0;
        int cases = 0;
        auto compare = [&](const BooleanFunction &f, int i) {
            int n = f.num_vars();
            auto g = derivative(f, unit_direction(n, i));
            double phi = forrelation_bruteforce(g, nor_function(n), g);
            auto r = forrelation_iteration(f, i);
            worst = std::max(worst, std::abs(r.zero_amplitude->real() - phi));
            worst = std::max(worst, std::abs(r.zero_amplitude->imag()));
            ++cases;
        };
        for (const auto &f : enumerate_functions(2)) {
            compare(f, 1);
            compare(f, 2);
        }
        std::mt19937_64 rng(4);
        for (int k = 0; k < 200; ++k) {
            compare(random_function(4, rng), 1 + k % 4);
        }
        return Outcome{worst <= 1e-9, std::to_string(cases) + " cases (32 at n=2, 200 at n=4), max error " +
                                          fmt(worst) + " (tol 1e-9)"};
    });

    criterion(5, "exhaustive classical and exact QSAC equal epsilon_exact, n=3", 0, [] {
        int mismatches = 0;
        for (const auto &f : enumerate_functions(3)) {
            double truth = static_cast<double>(sac_report(f).epsilon_exact);
            for (auto a : {Algorithm::Classical, Algorithm::Qsac}) {
                ExperimentConfig cfg;
                cfg.algorithm = a;
                cfg.exhaustive = true;
                mismatches += estimate(f, cfg).epsilon_estimate != truth;
            }
        }
        return Outcome{mismatches == 0, "256 functions x 2 algorithms, " + std::to_string(mismatches) +
                                            " inexact results"};
    });

    criterion(6, "Hoeffding coverage at n=4, t=0.1, delta=0.1", 120, [] {
        const std::uint64_t m = plan_samples(0.1, 0.1, SampleVariant::Qsac, 4);
        std::mt19937_64 rng(6);
        ExperimentConfig cfg;
        cfg.algorithm = Algorithm::Qsac;
        cfg.t = 0.1;
        cfg.delta = 0.1;
        std::vector<int> hits(4, 0);
        const int reps = 500;
        for (int rep = 0; rep < reps; ++rep) {
            auto f = random_function(4, rng);
            auto s = direct_walsh(f);
            cfg.seed = static_cast<std::uint64_t>(rep);
            auto r = qsac_estimate(f, cfg);
            for (int i = 1; i <= 4; ++i) {
                // sample_mean is the fraction of target outcome 1.
                hits[i - 1] += r.directions[i - 1].interval.contains(spectral_mass(s, 4, i, 0));
            }
        }
        int worst = *std::min_element(hits.begin(), hits.end());
        double rate = static_cast<double>(worst) / reps;
        return Outcome{m == 150 && rate >= 0.85, "m=" + std::to_string(m) + " (expected 150), worst coordinate covered " +
                                                     std::to_string(worst) + "/500 = " + fmt(rate) + " (need >= 0.85)"};
    });

    criterion(7, "complexity table rows and circuit audit", 0, [] {
        struct Expected {
            const char *name, *query, *sample, *qubits;
        };
        const Expected rows[] = {
            {"Classical", "2n", "(2^n/t^2) log(2/delta)", "-"},
            {"QSAC", "n", "(1/2t^2) log(2/delta)", "n+1"},
            {"Direct", "2n", "((2^n-1)/2t^2) log(2/delta)", "n+1"},
            {"Forrelation", "5n", "((2^n-1)/2t^2) log(2/delta)", "n+1"},
            {"Autocorrelation", "2n", "(1/2t^2) log(2/delta)", "2n+3"},
        };
        auto table = table1(4, 0.05, 0.05);
        bool ok = table.size() == 5;
        for (std::size_t k = 0; ok && k < 5; ++k) {
            ok = table[k].algorithm == rows[k].name && table[k].query_symbolic == rows[k].query &&
                 table[k].sample_symbolic == rows[k].sample && table[k].qubits_symbolic == rows[k].qubits;
        }
        int audited = 0;
        bool audit_ok = true;
        std::mt19937_64 rng(7);
        for (int n = 2; n <= 8; ++n) {
            auto audit = audit_against_simulation(random_function(n, rng));
            audit_ok = audit_ok && audit.all_match();
            for (const auto &e : audit.entries) {
                int m = e.algorithm == "QSAC" ? 1 : e.algorithm == "Direct" ? 2 : 5;
                int k = e.algorithm == "Forrelation" ? 4 * n + 6 : 2 * n + 4;
                audit_ok = audit_ok && e.observed.oracle_calls == m && e.observed.gates == k;
                ++audited;
            }
        }
        return Outcome{ok && audit_ok, std::string("symbolic rows ") + (ok ? "match" : "DIFFER") + ", " +
                                           std::to_string(audited) + " circuits audited for n=2..8 " +
                                           (audit_ok ? "(all match)" : "(MISMATCH)")};
    });

    criterion(8, "distance to nearest SAC function <= epsilon_exact, n=3", 0, [] {
        auto audit = audit_distance_bound(3);
        int independent_violations = 0;
        for (const auto &f : enumerate_functions(3)) {
            if (brute_force_sac_distance(f) > sac_report(f).epsilon_exact) {
                ++independent_violations;
            }
        }
        bool agree = static_cast<std::size_t>(independent_violations) == audit.counterexamples.size();
        return Outcome{audit.holds() && agree,
                       std::to_string(audit.functions_checked) + " functions, " + std::to_string(audit.sac_functions) +
                           " SAC, " + std::to_string(audit.tight) + " tight, " +
                           std::to_string(audit.counterexamples.size()) + " counterexamples (independent check: " +
                           std::to_string(independent_violations) + ")"};
    });

    criterion(9, "estimate reports rerun byte-identically", 0, [] {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / ("sacq_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        int identical = 0;
        int runs = 0;
        std::string failed;
        const char *sources[] = {"--anf 'x1*x2 + x3*x4'", "--anf 'x1*x2*x3 + x2*x4 + x5'", "--hex 6ac3"};
        for (const char *algo : {"classical", "qsac", "direct", "forrelation"}) {
            for (const char *src : sources) {
                for (const char *mode : {"--shots 300", "--plan 0.2,0.1", "--exhaustive"}) {
                    fs::path report = dir / ("r" + std::to_string(runs) + ".json");
                    fs::path replay = dir / ("p" + std::to_string(runs) + ".json");
                    ++runs;
                    std::string args = std::string("estimate --format json --seed 99 --algorithm ") + algo + " " +
                                       src + " " + mode;
                    if (run_cli(args + " --out " + report.string()) != 0 ||
                        run_cli("rerun --manifest " + report.string() + " --out " + replay.string()) != 0) {
                        failed += std::string(" ") + algo + "/" + mode;
                        continue;
                    }
                    auto a = report_payload(nlohmann::json::parse(slurp(report))).dump(2);
                    auto b = report_payload(nlohmann::json::parse(slurp(replay))).dump(2);
                    if (a == b) {
                        ++identical;
                    } else {
                        failed += std::string(" ") + algo + "/" + mode;
                    }
                }
            }
        }
        std::error_code ec;
        fs::remove_all(dir, ec);
        return Outcome{identical == runs, std::to_string(identical) + "/" + std::to_string(runs) +
                                              " payloads identical (timestamp excluded)" +
                                              (failed.empty() ? "" : "; failed:" + failed)};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
