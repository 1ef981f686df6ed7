#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "thyper/error.hpp"
#include "thyper/hypergraph.hpp"
#include "thyper/sequences.hpp"
#include "thyper/spectrum.hpp"

namespace thyper {

inline constexpr std::uint64_t kDefaultSequenceBudget = std::uint64_t{1} << 16;

// Number of valid sequences with k <= n <= n_max, over all k in k_set
// (connected_only halves each count).
inline std::uint64_t sequence_count(int n_max, const std::vector<int>& k_set, bool connected_only) {
    std::uint64_t total = 0;
    for (int k : k_set) {
        for (int n = k; n <= n_max; ++n) {
            const int free_bits = n - k + (connected_only ? 0 : 1);
            if (free_bits >= 62) return std::numeric_limits<std::uint64_t>::max();
            total += std::uint64_t{1} << free_bits;
        }
    }
    return total;
}

inline void check_budget(int n_max, const std::vector<int>& k_set, bool connected_only,
                         std::uint64_t budget) {
    for (int k : k_set)
        if (k < 2) throw ValidationError("uniformity k must be at least 2");
    const auto count = sequence_count(n_max, k_set, connected_only);
    if (count > budget)
        throw BudgetExceededError("sweep covers " + std::to_string(count) +
                                  " sequences, budget is " + std::to_string(budget));
}

// Connected sequences ordered by k, then n, then bits.
inline std::vector<BinarySequence> connected_sequences(int n_max, std::vector<int> k_set) {
    std::sort(k_set.begin(), k_set.end());
    k_set.erase(std::unique(k_set.begin(), k_set.end()), k_set.end());
    std::vector<BinarySequence> out;
    for (int k : k_set)
        for (int n = k; n <= n_max; ++n)
            for_each_sequence(n, k, [&](const BinarySequence& s) {
                if (s.connected()) out.push_back(s);
            });
    return out;
}

// Evaluates f(items[i]) into slot i on up to `workers` threads; output order
// depends only on the input.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F f, unsigned workers = 0) {
    using R = decltype(f(items.front()));
    std::vector<R> results(items.size());
    if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1)));
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < items.size(); i += workers) results[i] = f(items[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

struct ScanRow {
    std::string sequence;  // short form
    int n = 0;
    int k = 0;
    int r = 0;
    double min_quotient_gap = std::numeric_limits<double>::infinity();  // inf when r = 1
    bool flagged = false;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    double tol = kDefaultMergeTol;

    [[nodiscard]] std::size_t flagged_count() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(),
                                                      [](const ScanRow& r) { return r.flagged; }));
    }
    [[nodiscard]] double smallest_gap() const {
        double g = std::numeric_limits<double>::infinity();
        for (const auto& r : rows) g = std::min(g, r.min_quotient_gap);
        return g;
    }
};

inline ScanRow scan_sequence(const BinarySequence& s, double tol) {
    const ThresholdHypergraph h(s);
    const auto q = quotient_matrix(h);
    const auto eig = quotient_eigenvalues(q);
    ScanRow row;
    row.sequence = format_short(to_short(s));
    row.n = s.n();
    row.k = s.k();
    row.r = q.r();
    for (std::size_t i = 1; i < eig.size(); ++i)
        row.min_quotient_gap = std::min(row.min_quotient_gap, eig[i - 1] - eig[i]);
    row.flagged = row.min_quotient_gap < tol;
    return row;
}

// Looks for repeated quotient eigenvalues over every connected sequence with
// n <= n_max. Evidence only: a clean report proves nothing.
inline ScanReport scan_quotient_simplicity(int n_max, const std::vector<int>& k_set, double tol,
                                           std::uint64_t budget = kDefaultSequenceBudget,
                                           unsigned workers = 0) {
    check_budget(n_max, k_set, true, budget);
    const auto seqs = connected_sequences(n_max, k_set);
    ScanReport report;
    report.tol = tol;
    report.rows = parallel_map(seqs, [tol](const BinarySequence& s) { return scan_sequence(s, tol); }, workers);
    return report;
}

}  // namespace thyper
