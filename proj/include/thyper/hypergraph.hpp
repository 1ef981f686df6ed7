#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "thyper/combinatorics.hpp"
#include "thyper/error.hpp"
#include "thyper/sequences.hpp"

namespace thyper {

using Vertex = int;
// Sorted ascending vertex list.
using Edge = std::vector<Vertex>;

inline constexpr std::uint64_t kDefaultEdgeCap = 10'000'000;

class ThresholdHypergraph {
public:
    explicit ThresholdHypergraph(BinarySequence seq) : seq_(std::move(seq)) {}

    [[nodiscard]] const BinarySequence& sequence() const { return seq_; }
    [[nodiscard]] int n() const { return seq_.n(); }
    [[nodiscard]] int k() const { return seq_.k(); }
    [[nodiscard]] bool pseudodominant(Vertex v) const { return seq_.bit(v); }

private:
    BinarySequence seq_;
};

// Symmetric pair-count matrix with zero diagonal; vertices 1-indexed.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(int n)
        : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] ExactCount operator()(Vertex i, Vertex j) const { return entries_[index(i, j)]; }
    void set(Vertex i, Vertex j, ExactCount c) {
        entries_[index(i, j)] = c;
        entries_[index(j, i)] = c;
    }

    // Sum of a_{ij}^2 over i != j.
    [[nodiscard]] ExactCount frobenius_squared() const {
        ExactCount total{0};
        for (auto c : entries_) total += c * c;
        return total;
    }

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;
    friend auto operator<=>(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    [[nodiscard]] std::size_t index(Vertex i, Vertex j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_;
    std::vector<ExactCount> entries_;
};

// Arbitrary k-uniform hypergraph on vertices 1..n (n <= 64), kept for
// structures no sequence represents.
class GeneralHypergraph {
public:
    GeneralHypergraph(int n, int k, std::vector<Edge> edges) : n_(n), k_(k) {
        if (n_ < 0 || n_ > 64) throw ValidationError("general hypergraph supports 0..64 vertices");
        if (k_ < 2) throw ValidationError("uniformity k must be at least 2");
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            if (static_cast<int>(e.size()) != k_)
                throw ValidationError("edge of size " + std::to_string(e.size()) +
                                      " in a " + std::to_string(k_) + "-uniform hypergraph");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw ValidationError("edge with a repeated vertex");
            if (e.front() < 1 || e.back() > n_) throw ValidationError("edge vertex out of range");
            if (masks_.insert(mask_of(e)).second) edges_.push_back(std::move(e));
        }
        std::sort(edges_.begin(), edges_.end());
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] bool contains(std::uint64_t mask) const { return masks_.contains(mask); }

    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }
    static std::uint64_t mask_of(const Edge& e) {
        std::uint64_t m = 0;
        for (Vertex v : e) m |= bit(v);
        return m;
    }

private:
    int n_;
    int k_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> masks_;
};

// Calls f on every size-`size` subset of `pool` (kept in pool order).
template <typename F>
void for_each_combination(const std::vector<Vertex>& pool, int size, F&& f) {
    const int m = static_cast<int>(pool.size());
    if (size < 0 || size > m) return;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int t = 0; t < size; ++t) idx[static_cast<std::size_t>(t)] = t;
    Edge pick(static_cast<std::size_t>(size));
    while (true) {
        for (int t = 0; t < size; ++t)
            pick[static_cast<std::size_t>(t)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
        f(pick);
        int t = size - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - size + t) --t;
        if (t < 0) return;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < size; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
}

inline bool is_edge(const ThresholdHypergraph& h, const Edge& e) {
    if (static_cast<int>(e.size()) != h.k())
        throw ValidationError("edge must have exactly k = " + std::to_string(h.k()) + " vertices");
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("edge with a repeated vertex");
    if (sorted.front() < 1 || sorted.back() > h.n())
        throw std::out_of_range("edge vertex outside 1.." + std::to_string(h.n()));
    return h.pseudodominant(sorted.back());
}

inline std::vector<Vertex> pseudodominants(const ThresholdHypergraph& h) {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= h.n(); ++v)
        if (h.pseudodominant(v)) out.push_back(v);
    return out;
}

// Sum over pseudodominant l of C(l-1, k-1).
inline ExactCount edge_count(const ThresholdHypergraph& h) {
    ExactCount total{0};
    for (Vertex l : pseudodominants(h)) total += binomial(l - 1, h.k() - 1);
    return total;
}

// All edges in lexicographic order.
inline std::vector<Edge> enumerate_edges(const ThresholdHypergraph& h,
                                         std::uint64_t cap = kDefaultEdgeCap) {
    const auto total = edge_count(h);
    if (total.value() > cap)
        throw CapExceededError(std::to_string(total.value()) + " edges exceed the oracle cap of " +
                               std::to_string(cap));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total.value()));
    const int k = h.k();
    for (Vertex l : pseudodominants(h)) {
        // (k-1)-subsets of 1..l-1, odometer style.
        Edge e(static_cast<std::size_t>(k));
        for (int t = 0; t < k - 1; ++t) e[static_cast<std::size_t>(t)] = t + 1;
        e.back() = l;
        while (true) {
            edges.push_back(e);
            int t = k - 2;
            while (t >= 0 && e[static_cast<std::size_t>(t)] == l - 1 - (k - 2 - t)) --t;
            if (t < 0) break;
            ++e[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < k - 1; ++u)
                e[static_cast<std::size_t>(u)] = e[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// a_{ij}: edges ending at max(i,j) plus edges ending at a later
// pseudodominant vertex.
inline ExactCount edge_count_pair(const ThresholdHypergraph& h, Vertex i, Vertex j) {
    if (i == j) throw ValidationError("edge_count_pair needs two distinct vertices");
    if (i < 1 || j < 1 || i > h.n() || j > h.n())
        throw std::out_of_range("vertex outside 1.." + std::to_string(h.n()));
    const Vertex hi = std::max(i, j);
    const int k = h.k();
    ExactCount total = h.pseudodominant(hi) ? binomial(hi - 2, k - 2) : ExactCount{0};
    for (Vertex l = hi + 1; l <= h.n(); ++l)
        if (h.pseudodominant(l)) total += binomial(l - 3, k - 3);
    return total;
}

// Same counts as edge_count_pair, with the tail sums shared across rows.
inline AdjacencyMatrix adjacency_closed_form(const ThresholdHypergraph& h) {
    const int n = h.n();
    const int k = h.k();
    // beyond[j] = sum over pseudodominant l > j of C(l-3, k-3)
    std::vector<ExactCount> beyond(static_cast<std::size_t>(n) + 1, ExactCount{0});
    for (Vertex j = n - 1; j >= 1; --j) {
        beyond[static_cast<std::size_t>(j)] = beyond[static_cast<std::size_t>(j + 1)];
        if (h.pseudodominant(j + 1)) beyond[static_cast<std::size_t>(j)] += binomial(j + 1 - 3, k - 3);
    }
    AdjacencyMatrix a(n);
    for (Vertex j = 2; j <= n; ++j) {
        const ExactCount ending = h.pseudodominant(j) ? binomial(j - 2, k - 2) : ExactCount{0};
        const ExactCount value = ending + beyond[static_cast<std::size_t>(j)];
        for (Vertex i = 1; i < j; ++i) a.set(i, j, value);
    }
    return a;
}

// Oracle: counts pairs over the enumerated edge list.
inline AdjacencyMatrix adjacency_bruteforce(const ThresholdHypergraph& h,
                                            std::uint64_t cap = kDefaultEdgeCap) {
    const int n = h.n();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& e : enumerate_edges(h, cap))
        for (std::size_t x = 0; x < e.size(); ++x)
            for (std::size_t y = x + 1; y < e.size(); ++y)
                ++counts[static_cast<std::size_t>(e[x] - 1) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(e[y] - 1)];
    AdjacencyMatrix a(n);
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j)
            a.set(i, j, ExactCount(counts[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
                                          static_cast<std::size_t>(j - 1)]));
    return a;
}

inline GeneralHypergraph to_general(const ThresholdHypergraph& h,
                                    std::uint64_t cap = kDefaultEdgeCap) {
    return GeneralHypergraph(h.n(), h.k(), enumerate_edges(h, cap));
}

// x << y: every edge {x} u S with S in V - {x,y} stays an edge as {y} u S.
inline bool replaceable_leq(const GeneralHypergraph& g, Vertex x, Vertex y) {
    if (x == y) throw ValidationError("replaceable_leq needs distinct vertices");
    if (x < 1 || y < 1 || x > g.n() || y > g.n()) throw std::out_of_range("vertex out of range");
    const auto bx = GeneralHypergraph::bit(x);
    const auto by = GeneralHypergraph::bit(y);
    for (const auto& e : g.edges()) {
        const auto m = GeneralHypergraph::mask_of(e);
        if ((m & bx) == 0 || (m & by) != 0) continue;
        if (!g.contains((m & ~bx) | by)) return false;
    }
    return true;
}

// Every pair of vertices is comparable under <<.
inline bool check_total_replaceability(const GeneralHypergraph& g) {
    for (Vertex x = 1; x <= g.n(); ++x)
        for (Vertex y = x + 1; y <= g.n(); ++y)
            if (!replaceable_leq(g, x, y) && !replaceable_leq(g, y, x)) return false;
    return true;
}

struct SplitPartition {
    std::vector<Vertex> stable;
    std::vector<Vertex> clique;
};

inline SplitPartition split_partition(const ThresholdHypergraph& h) {
    SplitPartition p;
    for (Vertex v = 1; v <= h.n(); ++v) (h.pseudodominant(v) ? p.clique : p.stable).push_back(v);
    return p;
}

}  // namespace thyper
