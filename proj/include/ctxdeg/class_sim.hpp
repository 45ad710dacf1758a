// Copyright 2026 The ctxdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXDEG_CLASS_SIM_HPP
#define CTXDEG_CLASS_SIM_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ctxdeg/distribution.hpp"

namespace ctxdeg {

/// Quasi-Grover state grouped by invalid-line count.
///
/// The phase kick e^{i b ell beta} and the inversion about the mean depend on
/// an assignment only through its invalid count ell, so the full 2^V state
/// collapses exactly onto one complex amplitude per nonempty class. A query
/// on the eloily (2^27 assignments) touches 28 amplitudes.
class ClassState {
  public:
    explicit ClassState(const InvalidDistribution &dist)
        : num_lines_(dist.num_lines), n_(dist.total()) {
        double inv_sqrt_n = 1.0 / std::sqrt(n_);
        for (int ell = 0; ell <= dist.num_lines; ell++) {
            if (dist.counts[ell] > 0) {
                ells_.push_back(ell);
                multiplicity_.push_back(dist.counts[ell]);
                amplitudes_.push_back({inv_sqrt_n, 0.0});
            }
        }
        // Roots of unity e^{2 pi i m / L} with the conjugate pairing made
        // bit-exact, so class amplitudes of ell and L-ell stay conjugate.
        roots_.resize(num_lines_);
        for (int m = 0; m <= num_lines_ / 2; m++) {
            double angle = 2.0 * std::numbers::pi * m / num_lines_;
            roots_[m] = std::polar(1.0, angle);
            if (m != 0 && num_lines_ - m < num_lines_) {
                roots_[num_lines_ - m] = std::conj(roots_[m]);
            }
        }
    }

    int num_lines() const { return num_lines_; }
    double n() const { return n_; }
    double beta() const { return 2.0 * std::numbers::pi / num_lines_; }
    const std::vector<int> &class_labels() const { return ells_; }
    const std::vector<double> &multiplicities() const { return multiplicity_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amplitudes_; }

    int index_of(int ell) const {
        auto it = std::lower_bound(ells_.begin(), ells_.end(), ell);
        if (it == ells_.end() || *it != ell) {
            return -1;
        }
        return static_cast<int>(it - ells_.begin());
    }

    std::complex<double> amplitude_of(int ell) const {
        int i = index_of(ell);
        return i < 0 ? std::complex<double>{0.0, 0.0} : amplitudes_[i];
    }

    /// P(ell) = |j_ell| * |alpha_ell|^2; zero for empty classes.
    double probability(int ell) const {
        int i = index_of(ell);
        return i < 0 ? 0.0 : multiplicity_[i] * std::norm(amplitudes_[i]);
    }

    double norm() const {
        double s = 0.0;
        for (size_t i = 0; i < ells_.size(); i++) {
            s += multiplicity_[i] * std::norm(amplitudes_[i]);
        }
        return s;
    }

    std::complex<double> phase_for(int b, int ell) const {
        return roots_[static_cast<size_t>(int64_t{b} * ell % num_lines_)];
    }

    /// Mean amplitude that one query with multiplier b would produce, without
    /// mutating the state.
    std::complex<double> phased_mean(int b) const {
        std::complex<double> sum{0.0, 0.0};
        for (size_t i = 0; i < ells_.size(); i++) {
            sum += multiplicity_[i] * (phase_for(b, ells_[i]) * amplitudes_[i]);
        }
        return sum / n_;
    }

    /// One quasi-Grover query: phase every class by e^{i b ell beta}, then
    /// invert all amplitudes about the mean.
    void apply_query(int b) {
        if (b < 0 || b >= num_lines_) {
            throw std::invalid_argument("beta multiplier must lie in [0, L)");
        }
        for (size_t i = 0; i < ells_.size(); i++) {
            amplitudes_[i] *= phase_for(b, ells_[i]);
        }
        std::complex<double> sum{0.0, 0.0};
        for (size_t i = 0; i < ells_.size(); i++) {
            sum += multiplicity_[i] * amplitudes_[i];
        }
        std::complex<double> mean = sum / n_;
        for (std::complex<double> &a : amplitudes_) {
            a = 2.0 * mean - a;
        }
    }

  private:
    int num_lines_;
    double n_;
    std::vector<int> ells_;
    std::vector<double> multiplicity_;
    std::vector<std::complex<double>> amplitudes_;
    std::vector<std::complex<double>> roots_;
};

/// Per-query record of the class probabilities P(ell).
struct Trajectory {
    std::vector<int> ells;
    std::vector<std::vector<double>> probs;  // probs[t][class index], t = 0 is the initial state

    int queries() const {
        return static_cast<int>(probs.size()) - 1;
    }

    double probability_at(int t, int ell) const {
        for (size_t i = 0; i < ells.size(); i++) {
            if (ells[i] == ell) {
                return probs[t][i];
            }
        }
        return 0.0;
    }
};

namespace detail {

inline std::vector<double> snapshot_probs(const ClassState &s) {
    std::vector<double> p;
    p.reserve(s.class_labels().size());
    for (size_t i = 0; i < s.class_labels().size(); i++) {
        p.push_back(s.multiplicities()[i] * std::norm(s.amplitudes()[i]));
    }
    return p;
}

}  // namespace detail

/// Result of a fixed-beta evolution: the trajectory plus the first strict
/// local maximum of P(d).
struct FixedEvolution {
    Trajectory trajectory;
    int degree = 0;
    int t_opt = -1;         // first t with P(d)_{t-1} < P(d)_t >= P(d)_{t+1}
    double p_degree_opt = 0.0;
    double p_degree_baseline = 0.0;
};

/// Runs the fixed-beta quasi-Grover evolution (b = 1 every query) for t_max
/// queries and locates the first local maximum of P(d).
inline FixedEvolution evolve_fixed(const InvalidDistribution &dist, int t_max = 64) {
    ClassState state(dist);
    FixedEvolution out;
    out.degree = dist.degree();
    out.trajectory.ells = state.class_labels();
    out.trajectory.probs.push_back(detail::snapshot_probs(state));
    for (int t = 1; t <= t_max; t++) {
        state.apply_query(1);
        out.trajectory.probs.push_back(detail::snapshot_probs(state));
    }
    int d_index = state.index_of(out.degree);
    out.p_degree_baseline = out.trajectory.probs[0][d_index];
    for (int t = 1; t < t_max; t++) {
        double prev = out.trajectory.probs[t - 1][d_index];
        double cur = out.trajectory.probs[t][d_index];
        double next = out.trajectory.probs[t + 1][d_index];
        if (prev < cur && cur >= next) {
            out.t_opt = t;
            out.p_degree_opt = cur;
            break;
        }
    }
    return out;
}

/// A per-query schedule of beta multipliers b_t. Queries beyond the stored
/// prefix use b_t = 0 (phases off, diffusion still applied).
struct BetaSchedule {
    std::vector<int> multipliers;
    int t_opt = -1;       // query index of max P(target) during training
    double max_p = 0.0;   // max P(target) during training
    InvalidDistribution::Source trained_on = InvalidDistribution::Source::kExact;

    int multiplier_at(int t) const {  // t is 1-based
        if (t < 1 || t > static_cast<int>(multipliers.size())) {
            return 0;
        }
        return multipliers[t - 1];
    }
};

struct OptimizeOptions {
    int t_max = 2000;
    double improvement_epsilon = 1e-6;  // minimal P gain that counts as progress
    int patience = 3;                   // stalled queries tolerated before stopping
    double tie_epsilon = 1e-12;         // D ties resolved toward the smaller b
};

struct OptimizeResult {
    BetaSchedule schedule;
    Trajectory trajectory;       // P(ell) on the training distribution
    std::vector<double> p_target;  // P(target) per query, index 0 = initial
};

/// Greedy dynamic-beta training: at each query, sweep every multiplier
/// b in [0, L), score it by the distance D = |mean - e^{i b ell' beta} *
/// alpha_ell'| between the would-be mean and the phased target amplitude,
/// and apply the maximiser. Ties go to the smallest b. Training stops once
/// P(target) has failed to improve by more than improvement_epsilon for
/// `patience` consecutive queries; the stalled tail is dropped from the
/// schedule.
inline OptimizeResult optimize_betas(const InvalidDistribution &dist, int target_ell,
                                     const OptimizeOptions &options = {}) {
    if (target_ell < 0 || target_ell > dist.num_lines) {
        throw std::invalid_argument("target class out of range [0, L]");
    }
    ClassState state(dist);
    int num_lines = dist.num_lines;

    OptimizeResult out;
    out.schedule.trained_on = dist.source;
    out.trajectory.ells = state.class_labels();
    out.trajectory.probs.push_back(detail::snapshot_probs(state));
    out.p_target.push_back(state.probability(target_ell));

    double best_p = out.p_target[0];
    int best_t = 0;
    int stalled = 0;
    for (int t = 1; t <= options.t_max; t++) {
        int best_b = 0;
        double best_d = -1.0;
        for (int b = 0; b < num_lines; b++) {
            std::complex<double> mean = state.phased_mean(b);
            std::complex<double> phased_target =
                state.phase_for(b, target_ell) * state.amplitude_of(target_ell);
            double d = std::abs(mean - phased_target);
            if (d > best_d + options.tie_epsilon) {
                best_d = d;
                best_b = b;
            }
        }
        state.apply_query(best_b);
        out.schedule.multipliers.push_back(best_b);
        out.trajectory.probs.push_back(detail::snapshot_probs(state));
        double p = state.probability(target_ell);
        out.p_target.push_back(p);
        if (p > best_p + options.improvement_epsilon) {
            best_p = p;
            best_t = t;
            stalled = 0;
        } else {
            stalled++;
            if (stalled >= options.patience) {
                break;
            }
        }
    }
    out.schedule.t_opt = best_t;
    out.schedule.max_p = best_p;
    // Queries after the optimum were stalled; they are equivalent to b_t = 0
    // padding, so trim the schedule at the optimum.
    out.schedule.multipliers.resize(best_t);
    return out;
}

struct ReplayResult {
    Trajectory trajectory;
    std::vector<double> p_target;  // on the replay distribution
    int t_opt = 0;                 // argmax of P(target) over the replay
    double max_p = 0.0;
};

/// Replays a trained schedule against another distribution (typically a
/// binomially-trained schedule against the exact one) and reports where
/// P(target) peaks.
inline ReplayResult replay_schedule(const InvalidDistribution &dist, const BetaSchedule &schedule,
                                    int target_ell, int horizon = -1) {
    if (horizon < 0) {
        horizon = static_cast<int>(schedule.multipliers.size());
    }
    ClassState state(dist);
    ReplayResult out;
    out.trajectory.ells = state.class_labels();
    out.trajectory.probs.push_back(detail::snapshot_probs(state));
    out.p_target.push_back(state.probability(target_ell));
    out.max_p = out.p_target[0];
    out.t_opt = 0;
    for (int t = 1; t <= horizon; t++) {
        state.apply_query(schedule.multiplier_at(t));
        out.trajectory.probs.push_back(detail::snapshot_probs(state));
        double p = state.probability(target_ell);
        out.p_target.push_back(p);
        if (p > out.max_p) {
            out.max_p = p;
            out.t_opt = t;
        }
    }
    return out;
}

/// Evolves a fresh state by the first `queries` entries of a schedule.
inline ClassState evolve_schedule(const InvalidDistribution &dist, const BetaSchedule &schedule,
                                  int queries) {
    ClassState state(dist);
    for (int t = 1; t <= queries; t++) {
        state.apply_query(schedule.multiplier_at(t));
    }
    return state;
}

namespace detail {

// Deterministic uniform double in [0,1) from the raw generator stream;
// avoids std::uniform_real_distribution, whose output is
// implementation-defined.
inline double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline size_t sample_cdf(const std::vector<double> &cdf, double u) {
    double target = u * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    size_t i = static_cast<size_t>(it - cdf.begin());
    return std::min(i, cdf.size() - 1);
}

}  // namespace detail

/// Born-rule measurement of a class state.
struct SampleResult {
    std::map<int, int> histogram_by_ell;
    std::map<int, int> histogram_by_y;        // y = min(ell, L - ell)
    std::map<int, Assignment> witness_by_ell;  // one concrete assignment per sampled class
    int min_observed_y = -1;
};

/// Samples `shots` measurements from the class probabilities
/// |j_ell| |alpha_ell|^2. The exact distribution supplies one stored witness
/// assignment per sampled class. y folds ell through min(ell, L - ell) only
/// when every line has an odd point count (the sign-flip argument needs odd
/// lines); otherwise y = ell.
inline SampleResult sample_measurement(const ClassState &state, const InvalidDistribution &exact,
                                       const Geometry &g, int shots, uint64_t seed) {
    if (shots <= 0) {
        throw std::invalid_argument("shots must be positive");
    }
    if (exact.source != InvalidDistribution::Source::kExact) {
        throw std::invalid_argument("witness lookup requires the exact distribution");
    }
    const std::vector<int> &ells = state.class_labels();
    std::vector<double> cdf(ells.size());
    double acc = 0.0;
    for (size_t i = 0; i < ells.size(); i++) {
        acc += state.multiplicities()[i] * std::norm(state.amplitudes()[i]);
        cdf[i] = acc;
    }
    bool fold = g.all_lines_odd();
    std::mt19937_64 rng(seed);
    SampleResult out;
    for (int s = 0; s < shots; s++) {
        size_t i = detail::sample_cdf(cdf, detail::uniform_unit(rng));
        int ell = ells[i];
        out.histogram_by_ell[ell]++;
        int y = fold ? std::min(ell, state.num_lines() - ell) : ell;
        out.histogram_by_y[y]++;
        if (out.min_observed_y < 0 || y < out.min_observed_y) {
            out.min_observed_y = y;
        }
        if (!out.witness_by_ell.count(ell) && exact.class_witness[ell] != kNoWitness) {
            out.witness_by_ell[ell] = Assignment{exact.class_witness[ell], exact.num_points};
        }
    }
    return out;
}

/// One bisection round of the unknown-degree search.
struct BisectionRound {
    int target_ell;
    int attempt;
    int schedule_t_opt;
    double trained_p;
    int observed_min_y;
    int lo_after;
    int hi_after;
    std::vector<int> multipliers;
};

struct BisectionResult {
    int degree_estimate = -1;
    std::vector<BisectionRound> rounds;

    std::string audit_trail() const {
        std::string out;
        for (const BisectionRound &r : rounds) {
            out += "round ell_prime=" + std::to_string(r.target_ell) +
                   " t_opt=" + std::to_string(r.schedule_t_opt) +
                   " observed=" + std::to_string(r.observed_min_y) + " bracket=[" +
                   std::to_string(r.lo_after) + "," + std::to_string(r.hi_after) + "]\n";
        }
        return out;
    }
};

struct BisectionOptions {
    int shots = 2048;
    OptimizeOptions optimize{};
};

/// Bisection search for the degree when d is unknown. Each round trains a
/// schedule for the midpoint class ell' on `model` (exact or binomial),
/// measures the physical (exact) state evolved by it, and shrinks the
/// bracket: any observation y <= ell' lowers hi to the best observed y;
/// ceil(log2(shots)) consecutive misses raise lo past ell'. The returned
/// estimate hi is an upper bound witnessed by an actual assignment; lo
/// movement is heuristic.
inline BisectionResult find_degree_bisection(const Geometry &g,
                                             const InvalidDistribution &exact,
                                             const InvalidDistribution &model, uint64_t seed,
                                             const BisectionOptions &options = {}) {
    int num_lines = g.num_lines();
    int lo = 0;
    int hi = num_lines / 2;
    int max_attempts = 1;
    while ((1 << max_attempts) < options.shots) {
        max_attempts++;
    }
    BisectionResult out;
    uint64_t round_seed = seed;
    while (lo < hi) {
        int target = (lo + hi) / 2;
        OptimizeResult trained = optimize_betas(model, target, options.optimize);
        bool hit = false;
        for (int attempt = 1; attempt <= max_attempts; attempt++) {
            ClassState state = evolve_schedule(exact, trained.schedule, trained.schedule.t_opt);
            SampleResult sample =
                sample_measurement(state, exact, g, options.shots, round_seed++);
            int observed = sample.min_observed_y;
            if (observed >= 0 && observed < hi) {
                hi = observed;
            }
            hit = observed >= 0 && observed <= target;
            out.rounds.push_back(BisectionRound{target, attempt, trained.schedule.t_opt,
                                                trained.schedule.max_p, observed, lo, hi,
                                                trained.schedule.multipliers});
            if (hit) {
                break;
            }
        }
        if (!hit) {
            lo = target + 1;
            if (!out.rounds.empty()) {
                out.rounds.back().lo_after = lo;
            }
        }
    }
    out.degree_estimate = hi;
    return out;
}

/// CSV export of a trajectory: `t,ell,P` rows for every recorded query.
inline void write_trajectory_csv(std::ostream &out, const Trajectory &trajectory) {
    out << "t,ell,P\n";
    char buf[48];
    for (size_t t = 0; t < trajectory.probs.size(); t++) {
        for (size_t i = 0; i < trajectory.ells.size(); i++) {
            std::snprintf(buf, sizeof buf, "%.12g", trajectory.probs[t][i]);
            out << t << "," << trajectory.ells[i] << "," << buf << "\n";
        }
    }
}

/// CSV export of a schedule: `t,b_t` rows, 1-based t.
inline void write_schedule_csv(std::ostream &out, const BetaSchedule &schedule) {
    out << "t,b_t\n";
    for (size_t t = 0; t < schedule.multipliers.size(); t++) {
        out << (t + 1) << "," << schedule.multipliers[t] << "\n";
    }
}

/// Parses a `t,b_t` CSV back into a schedule.
inline BetaSchedule parse_schedule_csv(std::istream &in) {
    BetaSchedule schedule;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("t,", 0) == 0) {
            continue;
        }
        size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("schedule rows must be t,b_t");
        }
        int t = std::stoi(line.substr(0, comma));
        int b = std::stoi(line.substr(comma + 1));
        if (t != static_cast<int>(schedule.multipliers.size()) + 1) {
            throw std::invalid_argument("schedule rows must be consecutive from t=1");
        }
        schedule.multipliers.push_back(b);
    }
    return schedule;
}

}  // namespace ctxdeg

#endif
