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

#ifndef CTXDEG_DISTRIBUTION_HPP
#define CTXDEG_DISTRIBUTION_HPP

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "ctxdeg/geometry.hpp"

namespace ctxdeg {

/// One hidden-variable configuration: bit v encodes a_v, i.e. the classical
/// outcome (-1)^{a_v} assigned to point v.
struct Assignment {
    uint64_t bits = 0;
    int num_points = 0;

    std::string to_string() const {
        std::string s(static_cast<size_t>(num_points), '0');
        for (int v = 0; v < num_points; v++) {
            if ((bits >> v) & 1) {
                s[v] = '1';
            }
        }
        return s;
    }
};

/// Number of lines whose parity constraint the assignment violates.
inline int invalid_count(const Geometry &g, uint64_t assignment_bits) {
    int count = 0;
    for (const Line &l : g.lines) {
        int parity = 0;
        for (int k = 0; k < l.size; k++) {
            parity ^= static_cast<int>((assignment_bits >> l.points[k]) & 1);
        }
        count += (parity != l.sign);
    }
    return count;
}

inline int invalid_count(const Geometry &g, const Assignment &a) {
    if (a.num_points != g.num_points) {
        throw std::invalid_argument("assignment length does not match point count");
    }
    return invalid_count(g, a.bits);
}

constexpr uint64_t kNoWitness = std::numeric_limits<uint64_t>::max();

/// Histogram of assignments by invalid-line count. Exact distributions carry
/// integer counts summing to 2^V plus one minimal witness assignment per
/// nonempty class; binomial distributions approximate counts as
/// C(L,ell) * 2^{V-L}, which may be fractional when L > V.
struct InvalidDistribution {
    enum class Source { kExact, kBinomial };

    std::string geometry_name;
    int num_points = 0;
    int num_lines = 0;
    Source source = Source::kExact;
    std::vector<double> counts;          // size num_lines + 1
    std::vector<uint64_t> class_witness; // minimal assignment per class; kNoWitness if empty

    double total() const {
        return std::ldexp(1.0, num_points);  // 2^V, exact for V <= 52
    }

    bool has_class(int ell) const {
        return ell >= 0 && ell <= num_lines && counts[ell] > 0;
    }

    /// Degree of contextuality: the smallest invalid count with a nonzero
    /// class.
    int degree() const {
        for (int ell = 0; ell <= num_lines; ell++) {
            if (counts[ell] > 0) {
                return ell;
            }
        }
        throw std::logic_error("empty distribution");
    }

    double probability(int ell) const {
        if (ell < 0 || ell > num_lines) {
            return 0.0;
        }
        return counts[ell] / total();
    }
};

namespace detail {

struct IncidenceTable {
    int num_points;
    int num_lines;
    std::vector<uint64_t> line_mask;
    std::vector<uint8_t> line_negative;
    std::vector<std::vector<int>> lines_of_point;

    explicit IncidenceTable(const Geometry &g)
        : num_points(g.num_points), num_lines(g.num_lines()), lines_of_point(g.num_points) {
        line_mask.reserve(num_lines);
        line_negative.reserve(num_lines);
        for (int i = 0; i < num_lines; i++) {
            line_mask.push_back(g.line_mask(i));
            line_negative.push_back(static_cast<uint8_t>(g.lines[i].sign));
            for (int k = 0; k < g.lines[i].size; k++) {
                lines_of_point[g.lines[i].points[k]].push_back(i);
            }
        }
    }
};

struct BlockResult {
    std::vector<uint64_t> counts;
    std::vector<uint64_t> witness;
};

// Gray-code walk over all assignments whose bits above `low_bits` equal
// `block`. Consecutive assignments differ in one point, so the invalid count
// updates by toggling only the lines through the flipped point.
inline BlockResult gray_walk_block(const IncidenceTable &table, int low_bits, uint64_t block) {
    BlockResult out;
    out.counts.assign(table.num_lines + 1, 0);
    out.witness.assign(table.num_lines + 1, kNoWitness);

    uint64_t base = block << low_bits;
    std::vector<uint8_t> line_invalid(table.num_lines);
    int ell = 0;
    for (int i = 0; i < table.num_lines; i++) {
        int parity = std::popcount(base & table.line_mask[i]) & 1;
        line_invalid[i] = parity != table.line_negative[i];
        ell += line_invalid[i];
    }
    out.counts[ell]++;
    out.witness[ell] = base;

    uint64_t steps = uint64_t{1} << low_bits;
    for (uint64_t k = 1; k < steps; k++) {
        int point = std::countr_zero(k);
        for (int i : table.lines_of_point[point]) {
            line_invalid[i] ^= 1;
            ell += line_invalid[i] ? 1 : -1;
        }
        out.counts[ell]++;
        uint64_t value = base | (k ^ (k >> 1));
        if (value < out.witness[ell]) {
            out.witness[ell] = value;
        }
    }
    return out;
}

inline int env_worker_count() {
    if (const char *env = std::getenv("CTXDEG_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) {
            return n;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace detail

/// Exact distribution of invalid-line counts over all 2^V assignments.
///
/// The walk is partitioned deterministically: the top bits are fixed per
/// block and each block runs an independent Gray-code walk, so results are
/// identical for any worker count. workers <= 0 reads CTXDEG_WORKERS or falls
/// back to the hardware thread count.
inline InvalidDistribution exact_distribution(const Geometry &g, int workers = 0,
                                              int max_points = 30) {
    if (g.num_points < 1) {
        throw std::invalid_argument("geometry has no points");
    }
    if (g.num_points > max_points) {
        throw std::invalid_argument("brute force limited to " + std::to_string(max_points) +
                                    " points (2^V assignments)");
    }
    if (workers <= 0) {
        workers = detail::env_worker_count();
    }
    detail::IncidenceTable table(g);

    int block_bits = 0;
    while ((1 << block_bits) < workers && block_bits < g.num_points - 1) {
        block_bits++;
    }
    if (workers == 1) {
        block_bits = 0;
    }
    int low_bits = g.num_points - block_bits;
    int num_blocks = 1 << block_bits;

    std::vector<detail::BlockResult> results(num_blocks);
    if (num_blocks == 1) {
        results[0] = detail::gray_walk_block(table, low_bits, 0);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; w++) {
            pool.emplace_back([&] {
                for (int b = next.fetch_add(1); b < num_blocks; b = next.fetch_add(1)) {
                    results[b] = detail::gray_walk_block(table, low_bits, b);
                }
            });
        }
        for (std::thread &t : pool) {
            t.join();
        }
    }

    InvalidDistribution dist;
    dist.geometry_name = g.name;
    dist.num_points = g.num_points;
    dist.num_lines = table.num_lines;
    dist.source = InvalidDistribution::Source::kExact;
    std::vector<uint64_t> totals(table.num_lines + 1, 0);
    dist.class_witness.assign(table.num_lines + 1, kNoWitness);
    for (const detail::BlockResult &r : results) {
        for (int ell = 0; ell <= table.num_lines; ell++) {
            totals[ell] += r.counts[ell];
            if (r.witness[ell] < dist.class_witness[ell]) {
                dist.class_witness[ell] = r.witness[ell];
            }
        }
    }
    dist.counts.assign(totals.begin(), totals.end());
    return dist;
}

/// Exact distribution computed by re-counting every assignment from scratch.
/// Slow; exists as an independent cross-check of the Gray-code walk.
inline InvalidDistribution naive_distribution(const Geometry &g, int max_points = 22) {
    if (g.num_points > max_points) {
        throw std::invalid_argument("naive recount limited to " + std::to_string(max_points) +
                                    " points");
    }
    InvalidDistribution dist;
    dist.geometry_name = g.name;
    dist.num_points = g.num_points;
    dist.num_lines = g.num_lines();
    dist.source = InvalidDistribution::Source::kExact;
    dist.counts.assign(dist.num_lines + 1, 0.0);
    dist.class_witness.assign(dist.num_lines + 1, kNoWitness);
    uint64_t n = uint64_t{1} << g.num_points;
    for (uint64_t a = 0; a < n; a++) {
        int ell = invalid_count(g, a);
        dist.counts[ell] += 1.0;
        if (a < dist.class_witness[ell]) {
            dist.class_witness[ell] = a;
        }
    }
    return dist;
}

struct DegreeResult {
    int degree;
    Assignment witness;
};

/// Degree of contextuality with the minimal witness assignment (lowest
/// binary value among assignments attaining the degree).
inline DegreeResult degree_of(const Geometry &g, int workers = 0) {
    InvalidDistribution dist = exact_distribution(g, workers);
    int d = dist.degree();
    return DegreeResult{d, Assignment{dist.class_witness[d], g.num_points}};
}

/// Binomial approximation of the invalid-line distribution:
/// counts[ell] = C(L,ell) * 2^{V-L}. Classes sum to 2^V by the binomial
/// theorem; counts are fractional when L exceeds V.
inline InvalidDistribution binomial_distribution(const Geometry &g) {
    InvalidDistribution dist;
    dist.geometry_name = g.name;
    dist.num_points = g.num_points;
    dist.num_lines = g.num_lines();
    dist.source = InvalidDistribution::Source::kBinomial;
    int l = dist.num_lines;
    dist.counts.assign(l + 1, 0.0);
    dist.class_witness.assign(l + 1, kNoWitness);
    double scale = std::ldexp(1.0, g.num_points - l);  // 2^{V-L}
    for (int ell = 0; ell <= l; ell++) {
        dist.counts[ell] = detail::binomial_coefficient(l, ell) * scale;
    }
    return dist;
}

/// CSV export: comment header, then one `ell,count` row per class in
/// ascending ell (empty classes omitted).
inline void write_distribution_csv(std::ostream &out, const InvalidDistribution &dist) {
    out << "# geometry=" << dist.geometry_name << " n=" << static_cast<uint64_t>(dist.total())
        << " source="
        << (dist.source == InvalidDistribution::Source::kExact ? "exact" : "binomial") << "\n";
    out << "ell,count\n";
    char buf[64];
    for (int ell = 0; ell <= dist.num_lines; ell++) {
        double c = dist.counts[ell];
        if (c <= 0) {
            continue;
        }
        if (c == std::floor(c)) {
            std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(c));
        } else {
            std::snprintf(buf, sizeof buf, "%.17g", c);
        }
        out << ell << "," << buf << "\n";
    }
}

}  // namespace ctxdeg

#endif
