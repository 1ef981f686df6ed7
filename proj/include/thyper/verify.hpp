#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "thyper/combinatorics.hpp"
#include "thyper/hypergraph.hpp"
#include "thyper/scan.hpp"
#include "thyper/sequences.hpp"
#include "thyper/spectrum.hpp"

namespace thyper {

struct VerifyOptions {
    std::uint64_t sequence_budget = kDefaultSequenceBudget;
    std::uint64_t edge_cap = kDefaultEdgeCap;
    double numeric_tol = kDefaultNumericTol;
    double merge_tol = kDefaultMergeTol;
    int delete_vertex_n_max = 9;
};

struct CheckTally {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::string first_failure;
};

struct VerifyReport {
    // Ordered by check name for stable output.
    std::map<std::string, CheckTally> checks;
    std::uint64_t sequences = 0;

    void record(const std::string& name, bool ok, const std::string& where) {
        auto& t = checks[name];
        if (ok) {
            ++t.passed;
        } else {
            if (t.failed++ == 0) t.first_failure = where;
        }
    }
    [[nodiscard]] bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.failed == 0; });
    }
};

// Relations that must hold for every sequence; each returns true on success.
namespace checks {

inline bool column_equality(const ShortSequence& ss, const AdjacencyMatrix& a) {
    for (int j = 1; j <= ss.r(); ++j) {
        const auto first = static_cast<Vertex>(ss.prefix(j - 1) + 1);
        for (auto v = first + 1; v <= ss.prefix(j); ++v)
            for (Vertex s = 1; s <= a.n(); ++s)
                if (s != first && s != v && a(s, first) != a(s, v)) return false;
    }
    return true;
}

inline bool complement_partition(const ThresholdHypergraph& h, std::uint64_t cap) {
    const auto e1 = enumerate_edges(h, cap);
    const auto e2 = enumerate_edges(ThresholdHypergraph(complement_sequence(h.sequence())), cap);
    std::vector<Edge> both;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(both));
    return both.empty() && ExactCount(e1.size() + e2.size()) == binomial(h.n(), h.k());
}

inline bool delete_vertex_agrees(const ThresholdHypergraph& h, Vertex i, std::uint64_t cap) {
    std::vector<Edge> induced;
    for (const auto& e : enumerate_edges(h, cap)) {
        if (std::find(e.begin(), e.end(), i) != e.end()) continue;
        Edge relabeled = e;
        for (auto& v : relabeled)
            if (v > i) --v;
        induced.push_back(std::move(relabeled));
    }
    std::sort(induced.begin(), induced.end());
    return enumerate_edges(ThresholdHypergraph(delete_vertex(h.sequence(), i)), cap) == induced;
}

inline bool split_holds(const ThresholdHypergraph& h, std::uint64_t cap) {
    const auto part = split_partition(h);
    const auto g = to_general(h, cap);
    for (const auto& e : g.edges())
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return !h.pseudodominant(v); })) return false;
    bool clique = true;
    for_each_combination(part.clique, h.k(), [&](const Edge& e) {
        clique = clique && g.contains(GeneralHypergraph::mask_of(e));
    });
    return clique;
}

inline bool two_route(const ThresholdHypergraph& h, const ShortSequence& ss) {
    for (int j = 1; j <= ss.r(); ++j)
        if (ss.run(j) >= 2 && block_eigenvalue_formula(ss, j).value != block_eigenvalue_pair_count(h, ss, j))
            return false;
    return true;
}

inline bool moments_hold(const Spectrum& s, const AdjacencyMatrix& a) {
    const double frob = to_double(a.frobenius_squared());
    return std::abs(s.trace()) <= 1e-8 && std::abs(s.sum_of_squares() - frob) <= 1e-6 * std::max(frob, 1.0);
}

}  // namespace checks

// Exhaustive sweep of every structural and spectral invariant over all
// sequences with k <= n <= n_max, k in k_set.
inline VerifyReport run_verify(int n_max, const std::vector<int>& k_set, const VerifyOptions& opts = {}) {
    check_budget(n_max, k_set, false, opts.sequence_budget);
    VerifyReport report;
    for (int k : k_set) {
        for (int n = k; n <= n_max; ++n) {
            std::set<AdjacencyMatrix> matrices;
            std::uint64_t count = 0;
            for_each_sequence(n, k, [&](const BinarySequence& s) {
                ++count;
                ++report.sequences;
                const std::string where = format_binary(s);
                const ThresholdHypergraph h(s);
                const auto ss = to_short(s);
                const auto closed = adjacency_closed_form(h);
                matrices.insert(closed);

                report.record("adjacency oracle", closed == adjacency_bruteforce(h, opts.edge_cap), where);
                report.record("edge count identity",
                              ExactCount(enumerate_edges(h, opts.edge_cap).size()) == edge_count(h), where);
                report.record("column equality", checks::column_equality(ss, closed), where);
                report.record("short round trip", to_binary(ss) == s, where);
                report.record("complement partition", checks::complement_partition(h, opts.edge_cap), where);
                report.record("complement involution", complement_sequence(complement_sequence(s)) == s, where);
                report.record("replaceability totality", check_total_replaceability(to_general(h, opts.edge_cap)),
                              where);
                report.record("split partition", checks::split_holds(h, opts.edge_cap), where);
                if (n <= opts.delete_vertex_n_max) {
                    bool ok = true;
                    for (Vertex i = 1; i <= n && ok; ++i) ok = checks::delete_vertex_agrees(h, i, opts.edge_cap);
                    report.record("delete vertex agreement", ok, where);
                }
                int block_total = 0;
                for (int a : ss.runs()) block_total += a - 1;
                report.record("block count", block_total == n - ss.r(), where);

                if (!s.connected()) return;
                report.record("two-route block eigenvalues", checks::two_route(h, ss), where);
                const auto closed_spec = full_spectrum_closed(h, opts.merge_tol);
                const auto numeric_spec = full_spectrum_numeric(h);
                report.record("closed vs numeric spectrum",
                              max_deviation(closed_spec, numeric_spec) < opts.numeric_tol, where);
                report.record("trace and frobenius",
                              checks::moments_hold(closed_spec, closed) && checks::moments_hold(numeric_spec, closed),
                              where);
                report.record("distinct eigenvalue bound", distinct_count(closed_spec) <= n - k + 2, where);
            });
            report.record("adjacency uniqueness", matrices.size() == count,
                          "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return report;
}

}  // namespace thyper
