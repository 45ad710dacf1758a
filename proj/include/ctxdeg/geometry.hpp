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

#ifndef CTXDEG_GEOMETRY_HPP
#define CTXDEG_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctxdeg/pauli.hpp"

namespace ctxdeg {

/// A 2- or 3-point line with a parity sign: 0 = positive (product +identity,
/// constraint sum a_p = 0 mod 2), 1 = negative.
struct Line {
    std::array<int, 3> points{-1, -1, -1};
    int size = 3;
    int sign = 0;

    Line() = default;
    Line(int a, int b, int sign_) : points{a, b, -1}, size(2), sign(sign_) {}
    Line(int a, int b, int c, int sign_) : points{a, b, c}, size(3), sign(sign_) {}

    bool operator==(const Line &other) const = default;
};

/// A point-line incidence structure with signed lines. Points may optionally
/// carry Pauli labels, in which case every labelled line is required to be a
/// context with a matching sign.
struct Geometry {
    std::string name;
    int num_points = 0;
    std::vector<Line> lines;
    std::vector<PauliOperator> labels;  // empty, or one per point

    bool labelled() const {
        return !labels.empty();
    }

    int num_lines() const {
        return static_cast<int>(lines.size());
    }

    int negative_line_count() const {
        int c = 0;
        for (const Line &l : lines) {
            c += l.sign;
        }
        return c;
    }

    std::vector<int> lines_per_point() const {
        std::vector<int> deg(num_points, 0);
        for (const Line &l : lines) {
            for (int k = 0; k < l.size; k++) {
                int p = l.points[k];
                if (p >= 0 && p < num_points) {
                    deg[p]++;
                }
            }
        }
        return deg;
    }

    /// Lines per point when the incidence is point-regular, nullopt otherwise.
    std::optional<int> uniform_lines_per_point() const {
        auto deg = lines_per_point();
        if (deg.empty()) {
            return std::nullopt;
        }
        for (int d : deg) {
            if (d != deg[0]) {
                return std::nullopt;
            }
        }
        return deg[0];
    }

    bool all_lines_odd() const {
        for (const Line &l : lines) {
            if (l.size % 2 == 0) {
                return false;
            }
        }
        return true;
    }

    /// Bitmask of a line's points. Valid for geometries with <= 64 points.
    uint64_t line_mask(int i) const {
        uint64_t m = 0;
        for (int k = 0; k < lines[i].size; k++) {
            m |= uint64_t{1} << lines[i].points[k];
        }
        return m;
    }
};

namespace detail {

inline uint64_t pauli_word_key(const PauliOperator &p) {
    return p.x_bits | (p.z_bits << p.num_qubits);
}

}  // namespace detail

/// Enumerates every context among `ops` and returns the resulting geometry.
/// Points keep the order of `ops`; lines come out sorted by ascending point
/// triple.
///
/// Each unordered commuting pair {a,b} closes to a unique third word a*b, so
/// the search is quadratic in the number of operators rather than cubic in
/// triples.
inline Geometry contexts_from_operators(const std::vector<PauliOperator> &ops,
                                        const std::string &name = "") {
    Geometry g;
    g.name = name;
    g.num_points = static_cast<int>(ops.size());
    g.labels = ops;
    if (ops.empty()) {
        return g;
    }
    int n = ops[0].num_qubits;
    std::unordered_map<uint64_t, int> index_of_word;
    index_of_word.reserve(ops.size() * 2);
    for (size_t i = 0; i < ops.size(); i++) {
        if (ops[i].num_qubits != n) {
            throw std::invalid_argument("operator set mixes qubit counts");
        }
        if (ops[i].is_identity_word()) {
            throw std::invalid_argument("operator set contains the identity");
        }
        auto [it, inserted] = index_of_word.emplace(detail::pauli_word_key(ops[i]), i);
        if (!inserted) {
            throw std::invalid_argument("duplicate operator in set: " + ops[i].label());
        }
    }
    for (int i = 0; i < g.num_points; i++) {
        for (int j = i + 1; j < g.num_points; j++) {
            if (!ops[i].commutes_with(ops[j])) {
                continue;
            }
            PauliOperator third = ops[i] * ops[j];
            if (third.is_identity_word()) {
                continue;  // ops[j] = +-ops[i] word, cannot happen for distinct words
            }
            auto it = index_of_word.find(detail::pauli_word_key(third));
            if (it == index_of_word.end() || it->second <= j) {
                continue;  // absent, or the triple was already emitted from a smaller pair
            }
            int k = it->second;
            ContextSign s = context_sign(ops[i], ops[j], ops[k]);
            if (s == ContextSign::kNotAContext) {
                continue;
            }
            g.lines.emplace_back(i, j, k, s == ContextSign::kNegative ? 1 : 0);
        }
    }
    std::sort(g.lines.begin(), g.lines.end(), [](const Line &a, const Line &b) {
        return a.points < b.points;
    });
    return g;
}

/// The full symplectic polar space on all 4^N - 1 nontrivial N-qubit
/// operators with every context as a line.
///
/// For N = 1 no two distinct nontrivial operators commute and the lone triple
/// {X,Y,Z} multiplies to +-i * identity, so the returned geometry has 3
/// points and no lines. This matches the point/line counting formulae, which
/// give zero three-point lines at N = 1.
inline Geometry build_symplectic(int n, int max_qubits = 4) {
    if (n < 1) {
        throw std::invalid_argument("symplectic space needs n >= 1");
    }
    if (n > max_qubits) {
        throw std::invalid_argument("symplectic space limited to " + std::to_string(max_qubits) +
                                    " qubits (line enumeration grows as 16^N)");
    }
    Geometry g = contexts_from_operators(all_nontrivial_operators(n),
                                         "symplectic-" + std::to_string(n));
    return g;
}

/// Point/line counts of the rank-N symplectic polar space over F2:
/// 4^N - 1 points, (4^N - 1)(4^{N-1} - 1)/3 lines, 4^{N-1} - 1 lines per
/// point.
struct SymplecticCounts {
    uint64_t points;
    uint64_t lines;
    uint64_t lines_per_point;
};

inline SymplecticCounts symplectic_counts(int n) {
    uint64_t p = (uint64_t{1} << (2 * n)) - 1;
    uint64_t lpp = n >= 1 ? (uint64_t{1} << (2 * (n - 1))) - 1 : 0;
    return SymplecticCounts{p, p * lpp / 3, lpp};
}

namespace detail {

// Peres-Mermin square with rows positive and columns negative:
//   YZ ZY XX
//   ZX XZ YY
//   XY YX ZZ
inline Geometry build_grid() {
    Geometry g;
    g.name = "grid";
    g.num_points = 9;
    static const char *kLabels[9] = {"YZ", "ZY", "XX", "ZX", "XZ", "YY", "XY", "YX", "ZZ"};
    for (const char *l : kLabels) {
        g.labels.push_back(PauliOperator::parse(l));
    }
    for (int r = 0; r < 3; r++) {
        g.lines.emplace_back(3 * r, 3 * r + 1, 3 * r + 2, 0);
    }
    for (int c = 0; c < 3; c++) {
        g.lines.emplace_back(c, c + 3, c + 6, 1);
    }
    return g;
}

inline Geometry build_doily() {
    Geometry g = contexts_from_operators(all_nontrivial_operators(2), "doily");
    return g;
}

// Finds the lexicographically first spread of the doily: 5 pairwise-disjoint
// lines covering all 15 points, searched by backtracking over the canonical
// line order.
inline std::vector<int> first_doily_spread(const Geometry &doily) {
    std::vector<int> chosen;
    std::vector<int> best;
    uint64_t covered = 0;
    int num_lines = doily.num_lines();
    auto recurse = [&](auto &&self, int start) -> bool {
        if (chosen.size() == 5) {
            best = chosen;
            return true;
        }
        for (int i = start; i < num_lines; i++) {
            uint64_t mask = doily.line_mask(i);
            if (covered & mask) {
                continue;
            }
            covered |= mask;
            chosen.push_back(i);
            if (self(self, i + 1)) {
                return true;
            }
            chosen.pop_back();
            covered &= ~mask;
        }
        return false;
    };
    recurse(recurse, 0);
    return best;
}

inline Geometry build_two_spread() {
    Geometry doily = build_doily();
    std::vector<int> spread = first_doily_spread(doily);
    Geometry g;
    g.name = "two_spread";
    g.num_points = doily.num_points;
    g.labels = doily.labels;
    std::set<int> removed(spread.begin(), spread.end());
    for (int i = 0; i < doily.num_lines(); i++) {
        if (!removed.count(i)) {
            g.lines.push_back(doily.lines[i]);
        }
    }
    return g;
}

// 27 three-qubit operators with exactly one identity tensor factor, and all
// 45 contexts among them.
inline Geometry build_eloily() {
    std::vector<PauliOperator> ops;
    for (const PauliOperator &p : all_nontrivial_operators(3)) {
        int identity_factors = 0;
        for (int q = 0; q < 3; q++) {
            bool x = (p.x_bits >> q) & 1;
            bool z = (p.z_bits >> q) & 1;
            if (!x && !z) {
                identity_factors++;
            }
        }
        if (identity_factors == 1) {
            ops.push_back(p);
        }
    }
    return contexts_from_operators(ops, "eloily");
}

// 3 points, 3 two-point lines, one negative. Not labellable by commuting
// Pauli operators; serves as the minimal even-line example.
inline Geometry build_triangle() {
    Geometry g;
    g.name = "triangle";
    g.num_points = 3;
    g.lines.emplace_back(0, 1, 0);
    g.lines.emplace_back(1, 2, 0);
    g.lines.emplace_back(0, 2, 1);
    return g;
}

}  // namespace detail

inline const std::vector<std::string> &named_geometries() {
    static const std::vector<std::string> kNames = {"triangle", "grid", "doily", "two_spread",
                                                    "eloily"};
    return kNames;
}

/// Builds one of the named example geometries: triangle, grid, doily,
/// two_spread, eloily.
inline Geometry build_named(const std::string &name) {
    if (name == "triangle") {
        return detail::build_triangle();
    }
    if (name == "grid") {
        return detail::build_grid();
    }
    if (name == "doily") {
        return detail::build_doily();
    }
    if (name == "two_spread" || name == "two-spread") {
        return detail::build_two_spread();
    }
    if (name == "eloily") {
        return detail::build_eloily();
    }
    throw std::invalid_argument("unknown geometry name: " + name);
}

/// Checks every Geometry invariant and, for labelled geometries, re-derives
/// each line sign from the operator product. Returns a list of violations;
/// empty means valid.
inline std::vector<std::string> validate(const Geometry &g) {
    std::vector<std::string> violations;
    auto complain = [&](const std::string &msg) { violations.push_back(msg); };

    if (g.num_points < 0) {
        complain("negative point count");
    }
    if (g.labelled() && static_cast<int>(g.labels.size()) != g.num_points) {
        complain("label count " + std::to_string(g.labels.size()) + " does not match point count " +
                 std::to_string(g.num_points));
    }
    std::set<std::vector<int>> seen;
    for (int i = 0; i < g.num_lines(); i++) {
        const Line &l = g.lines[i];
        std::string where = "line " + std::to_string(i);
        if (l.size != 2 && l.size != 3) {
            complain(where + ": line size must be 2 or 3");
            continue;
        }
        if (l.sign != 0 && l.sign != 1) {
            complain(where + ": sign out of range");
        }
        bool in_range = true;
        for (int k = 0; k < l.size; k++) {
            if (l.points[k] < 0 || l.points[k] >= g.num_points) {
                complain(where + ": index out of range (" + std::to_string(l.points[k]) + ")");
                in_range = false;
            }
        }
        if (!in_range) {
            continue;
        }
        std::vector<int> key(l.points.begin(), l.points.begin() + l.size);
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
            complain(where + ": repeated point within line");
            continue;
        }
        if (!seen.insert(key).second) {
            complain(where + ": duplicate line");
        }
        if (g.labelled()) {
            PauliOperator product = g.labels[l.points[0]];
            bool commuting = true;
            for (int a = 0; a < l.size && commuting; a++) {
                for (int b = a + 1; b < l.size; b++) {
                    if (!g.labels[l.points[a]].commutes_with(g.labels[l.points[b]])) {
                        complain(where + ": operators do not pairwise commute");
                        commuting = false;
                        break;
                    }
                }
            }
            if (!commuting) {
                continue;
            }
            for (int k = 1; k < l.size; k++) {
                product = product * g.labels[l.points[k]];
            }
            if (!product.is_identity_word() || (product.phase_exp != 0 && product.phase_exp != 2)) {
                complain(where + ": operator product is not +-identity");
            } else {
                int derived_sign = product.phase_exp == 2 ? 1 : 0;
                if (derived_sign != l.sign) {
                    complain(where + ": line sign mismatch (stored " +
                             std::string(l.sign ? "-" : "+") + ", derived " +
                             std::string(derived_sign ? "-" : "+") + ")");
                }
            }
        }
    }
    return violations;
}

/// Classical bounds attached to a geometry of degree d.
struct ContextualityBounds {
    int chi_bound;                   // L - 2d
    std::optional<double> omega_ll;  // line-line game bound; needs point-regular incidence
    double omega_pl;                 // point-line game bound
};

namespace detail {

inline double binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; i++) {
        c = c * (n - k + i) / i;
    }
    return c;
}

}  // namespace detail

/// Classical bounds for a geometry with degree d and a P-player game:
///   chi_bound = L - 2d
///   omega_ll  = 1 - [C(lp-1,1)/C(lp,P)] * d/V   (point-regular geometries only)
///   omega_pl  = 1 - (d/L)/3
inline ContextualityBounds contextuality_bounds(const Geometry &g, int d, int players) {
    int num_lines = g.num_lines();
    if (d < 0 || d > num_lines) {
        throw std::invalid_argument("degree out of range [0, L]");
    }
    ContextualityBounds out{};
    out.chi_bound = num_lines - 2 * d;
    out.omega_pl = 1.0 - (static_cast<double>(d) / num_lines) / 3.0;
    std::optional<int> lp = g.uniform_lines_per_point();
    if (lp.has_value()) {
        if (players < 1 || players > *lp) {
            throw std::invalid_argument("player count out of range [1, lines per point]");
        }
        double numer = detail::binomial_coefficient(*lp - 1, 1);
        double denom = detail::binomial_coefficient(*lp, players);
        out.omega_ll = 1.0 - (numer / denom) * (static_cast<double>(d) / g.num_points);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Incidence isomorphism
// ---------------------------------------------------------------------------

namespace detail {

// One round of Weisfeiler-Leman colour refinement on the bipartite
// point/line incidence graph. Returns stabilised point and line colours.
struct RefinedColours {
    std::vector<int> point_colour;
    std::vector<int> line_colour;
};

inline RefinedColours refine_colours(const Geometry &g) {
    int v = g.num_points;
    int nl = g.num_lines();
    std::vector<std::vector<int>> lines_of_point(v);
    for (int i = 0; i < nl; i++) {
        for (int k = 0; k < g.lines[i].size; k++) {
            lines_of_point[g.lines[i].points[k]].push_back(i);
        }
    }
    RefinedColours rc;
    rc.point_colour.assign(v, 0);
    rc.line_colour.assign(nl, 0);
    for (int i = 0; i < nl; i++) {
        rc.line_colour[i] = g.lines[i].size;  // split by line size only; signs excluded
    }
    for (int round = 0; round < v + nl + 2; round++) {
        std::map<std::pair<int, std::vector<int>>, int> pal;
        std::vector<int> next_point(v);
        for (int p = 0; p < v; p++) {
            std::vector<int> sig;
            for (int i : lines_of_point[p]) {
                sig.push_back(rc.line_colour[i]);
            }
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(rc.point_colour[p], sig);
            auto [it, _] = pal.emplace(key, static_cast<int>(pal.size()));
            next_point[p] = it->second;
        }
        std::map<std::pair<int, std::vector<int>>, int> pal2;
        std::vector<int> next_line(nl);
        for (int i = 0; i < nl; i++) {
            std::vector<int> sig;
            for (int k = 0; k < g.lines[i].size; k++) {
                sig.push_back(next_point[g.lines[i].points[k]]);
            }
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(rc.line_colour[i], sig);
            auto [it, _] = pal2.emplace(key, static_cast<int>(pal2.size()));
            next_line[i] = it->second;
        }
        bool stable = next_point == rc.point_colour && next_line == rc.line_colour;
        rc.point_colour = std::move(next_point);
        rc.line_colour = std::move(next_line);
        if (stable) {
            break;
        }
    }
    return rc;
}

inline void hash_mix(uint64_t &h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

}  // namespace detail

/// Isomorphism-invariant hash of the point-line incidence structure (signs
/// excluded). Equal hashes are necessary but not sufficient for isomorphism;
/// use incidence_isomorphic for a definite answer.
inline uint64_t incidence_hash(const Geometry &g) {
    detail::RefinedColours rc = detail::refine_colours(g);
    std::vector<int> pc = rc.point_colour;
    std::vector<int> lc = rc.line_colour;
    std::sort(pc.begin(), pc.end());
    std::sort(lc.begin(), lc.end());
    uint64_t h = 0x243f6a8885a308d3ull;
    detail::hash_mix(h, g.num_points);
    detail::hash_mix(h, g.num_lines());
    for (int c : pc) {
        detail::hash_mix(h, 0x100 + c);
    }
    for (int c : lc) {
        detail::hash_mix(h, 0x20000 + c);
    }
    return h;
}

/// Exact incidence isomorphism via backtracking point mapping, pruned by
/// refined colours. Signs play no role; compare negative_line_count
/// separately when the sign distribution matters.
inline bool incidence_isomorphic(const Geometry &a, const Geometry &b) {
    if (a.num_points != b.num_points || a.num_lines() != b.num_lines()) {
        return false;
    }
    int v = a.num_points;
    detail::RefinedColours ca = detail::refine_colours(a);
    detail::RefinedColours cb = detail::refine_colours(b);
    {
        std::vector<int> sa = ca.point_colour, sb = cb.point_colour;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
            return false;
        }
    }
    // Adjacency as sorted point-pair/triple sets for O(log) membership tests.
    auto line_keys = [](const Geometry &g) {
        std::set<std::vector<int>> keys;
        for (const Line &l : g.lines) {
            std::vector<int> key(l.points.begin(), l.points.begin() + l.size);
            std::sort(key.begin(), key.end());
            keys.insert(key);
        }
        return keys;
    };
    std::set<std::vector<int>> keys_b = line_keys(b);
    std::vector<std::vector<int>> lines_with_max(v);  // lines of a whose max point is p
    for (int i = 0; i < a.num_lines(); i++) {
        const Line &l = a.lines[i];
        int mx = *std::max_element(l.points.begin(), l.points.begin() + l.size);
        lines_with_max[mx].push_back(i);
    }
    std::vector<int> mapping(v, -1);
    std::vector<bool> used(v, false);
    auto recurse = [&](auto &&self, int p) -> bool {
        if (p == v) {
            return true;
        }
        for (int q = 0; q < v; q++) {
            if (used[q] || ca.point_colour[p] != cb.point_colour[q]) {
                continue;
            }
            mapping[p] = q;
            used[q] = true;
            bool ok = true;
            for (int i : lines_with_max[p]) {
                const Line &l = a.lines[i];
                std::vector<int> img;
                for (int k = 0; k < l.size; k++) {
                    img.push_back(mapping[l.points[k]]);
                }
                std::sort(img.begin(), img.end());
                if (!keys_b.count(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, p + 1)) {
                return true;
            }
            used[q] = false;
            mapping[p] = -1;
        }
        return false;
    };
    return recurse(recurse, 0);
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------
//
// geometry <name> points=<V> lines=<L>
// labels <space-separated Pauli labels>        (optional)
// line <i1> <i2> [<i3>] sign=<+|->             (one per line)

inline void write_geometry(std::ostream &out, const Geometry &g) {
    out << "geometry " << (g.name.empty() ? "unnamed" : g.name) << " points=" << g.num_points
        << " lines=" << g.num_lines() << "\n";
    if (g.labelled()) {
        out << "labels";
        for (const PauliOperator &p : g.labels) {
            out << " " << p.label();
        }
        out << "\n";
    }
    for (const Line &l : g.lines) {
        out << "line";
        for (int k = 0; k < l.size; k++) {
            out << " " << l.points[k];
        }
        out << " sign=" << (l.sign ? '-' : '+') << "\n";
    }
}

inline std::string geometry_to_string(const Geometry &g) {
    std::ostringstream oss;
    write_geometry(oss, g);
    return oss.str();
}

/// Parses the geometry text format and rejects any document violating the
/// Geometry invariants.
inline Geometry parse_geometry(std::istream &in) {
    Geometry g;
    std::string token;
    if (!(in >> token) || token != "geometry") {
        throw std::invalid_argument("geometry document must start with 'geometry'");
    }
    int declared_lines = -1;
    if (!(in >> g.name)) {
        throw std::invalid_argument("missing geometry name");
    }
    auto parse_kv = [](const std::string &t, const std::string &key) -> long {
        if (t.rfind(key + "=", 0) != 0) {
            throw std::invalid_argument("expected '" + key + "=<n>', got '" + t + "'");
        }
        return std::stol(t.substr(key.size() + 1));
    };
    if (!(in >> token)) {
        throw std::invalid_argument("missing points=<V>");
    }
    g.num_points = static_cast<int>(parse_kv(token, "points"));
    if (!(in >> token)) {
        throw std::invalid_argument("missing lines=<L>");
    }
    declared_lines = static_cast<int>(parse_kv(token, "lines"));

    std::string rest;
    std::getline(in, rest);  // discard remainder of header line
    std::string linebuf;
    while (std::getline(in, linebuf)) {
        std::istringstream ls(linebuf);
        std::string kind;
        if (!(ls >> kind) || kind.empty() || kind[0] == '#') {
            continue;
        }
        if (kind == "labels") {
            std::string lab;
            while (ls >> lab) {
                g.labels.push_back(PauliOperator::parse(lab));
            }
        } else if (kind == "line") {
            std::vector<int> pts;
            std::string sign_tok;
            std::string t;
            while (ls >> t) {
                if (t.rfind("sign=", 0) == 0) {
                    sign_tok = t.substr(5);
                } else {
                    pts.push_back(std::stoi(t));
                }
            }
            if (pts.size() != 2 && pts.size() != 3) {
                throw std::invalid_argument("line must list 2 or 3 point indices");
            }
            if (sign_tok != "+" && sign_tok != "-") {
                throw std::invalid_argument("line is missing sign=<+|->");
            }
            Line l;
            l.size = static_cast<int>(pts.size());
            for (size_t k = 0; k < pts.size(); k++) {
                l.points[k] = pts[k];
            }
            l.sign = sign_tok == "-" ? 1 : 0;
            g.lines.push_back(l);
        } else {
            throw std::invalid_argument("unrecognised directive: " + kind);
        }
    }
    if (declared_lines >= 0 && declared_lines != g.num_lines()) {
        throw std::invalid_argument("header declares " + std::to_string(declared_lines) +
                                    " lines, document has " + std::to_string(g.num_lines()));
    }
    if (g.num_lines() == 0) {
        throw std::invalid_argument("geometry document has no lines");
    }
    std::vector<std::string> violations = validate(g);
    if (!violations.empty()) {
        std::string msg = "invalid geometry:";
        for (const std::string &violation : violations) {
            msg += "\n  " + violation;
        }
        throw std::invalid_argument(msg);
    }
    return g;
}

}  // namespace ctxdeg

#endif
