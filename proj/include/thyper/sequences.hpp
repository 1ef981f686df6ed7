#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thyper/error.hpp"

namespace thyper {

// Creation word (b_1, ..., b_n)_k of a k-uniform threshold hypergraph.
// Vertices are 1-indexed: bit(i) is b_i.
class BinarySequence {
public:
    // Validates k >= 2, n >= k-1 and b_1 = ... = b_{k-1} = 0. A sequence of
    // length k-1 (necessarily all zeros) is the edgeless degenerate case that
    // vertex deletion can produce.
    BinarySequence(int k, std::vector<bool> bits) : k_(k), bits_(std::move(bits)) {
        if (k_ < 2) throw ValidationError("uniformity k must be at least 2");
        if (static_cast<int>(bits_.size()) < k_ - 1)
            throw ValidationError("sequence needs at least k-1 = " + std::to_string(k_ - 1) +
                                  " entries");
        for (int i = 1; i < k_; ++i)
            if (bits_[i - 1])
                throw ValidationError("b_" + std::to_string(i) + " must be 0 for k = " +
                                      std::to_string(k_));
    }

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int n() const { return static_cast<int>(bits_.size()); }
    [[nodiscard]] bool bit(int i) const { return bits_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] const std::vector<bool>& bits() const { return bits_; }

    // Connected iff the last vertex is pseudodominant.
    [[nodiscard]] bool connected() const { return n() >= k_ && bits_.back(); }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;
    friend auto operator<=>(const BinarySequence& a, const BinarySequence& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    int k_;
    std::vector<bool> bits_;
};

// Which bit sits at position k. With b_k = 1 the first run merges the k-1
// forced zeros with the first block of ones.
enum class LeadingBlock { kZero, kMergedOne };

// Run-length form C(a_1, ..., a_r)_k.
class ShortSequence {
public:
    ShortSequence(int k, std::vector<int> runs, LeadingBlock lead)
        : k_(k), runs_(std::move(runs)), lead_(lead) {
        if (k_ < 2) throw ValidationError("uniformity k must be at least 2");
        if (runs_.empty()) throw ValidationError("short sequence needs at least one run");
        for (int a : runs_)
            if (a < 1) throw ValidationError("short sequence runs must be positive");
    }

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int r() const { return static_cast<int>(runs_.size()); }
    [[nodiscard]] LeadingBlock lead() const { return lead_; }
    [[nodiscard]] const std::vector<int>& runs() const { return runs_; }
    // a_j, 1-indexed.
    [[nodiscard]] int run(int j) const { return runs_.at(static_cast<std::size_t>(j - 1)); }
    [[nodiscard]] int n() const { return std::accumulate(runs_.begin(), runs_.end(), 0); }

    // a_1 + ... + a_j (0 for j <= 0).
    [[nodiscard]] std::int64_t prefix(int j) const {
        std::int64_t s = 0;
        for (int t = 1; t <= std::min(j, r()); ++t) s += run(t);
        return s;
    }

    // Whether the vertices of block j carry bit 1.
    [[nodiscard]] bool is_one_block(int j) const {
        return lead_ == LeadingBlock::kZero ? (j % 2 == 0) : (j % 2 == 1);
    }

    friend bool operator==(const ShortSequence&, const ShortSequence&) = default;

private:
    int k_;
    std::vector<int> runs_;
    LeadingBlock lead_;
};

inline ShortSequence to_short(const BinarySequence& s) {
    const int n = s.n();
    const int k = s.k();
    std::vector<int> runs;
    int i = 1;
    LeadingBlock lead = LeadingBlock::kZero;
    if (n >= k && s.bit(k)) {
        lead = LeadingBlock::kMergedOne;
        i = k;
        while (i <= n && s.bit(i)) ++i;
        runs.push_back(i - 1);
    }
    while (i <= n) {
        const bool b = s.bit(i);
        const int start = i;
        while (i <= n && s.bit(i) == b) ++i;
        runs.push_back(i - start);
    }
    return ShortSequence(k, std::move(runs), lead);
}

inline BinarySequence to_binary(const ShortSequence& ss) {
    const int k = ss.k();
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(ss.n()));
    if (ss.lead() == LeadingBlock::kMergedOne) {
        if (ss.run(1) < k)
            throw ValidationError("short sequence with b_k = 1 needs a_1 >= k = " +
                                  std::to_string(k));
    } else if (ss.r() >= 2 && ss.run(1) < k) {
        throw ValidationError("short sequence with b_k = 0 needs a_1 >= k = " +
                              std::to_string(k) + " when a block of ones follows");
    } else if (ss.run(1) < k - 1) {
        throw ValidationError("short sequence needs at least k-1 leading zeros");
    }
    for (int j = 1; j <= ss.r(); ++j) {
        const bool one = ss.is_one_block(j);
        for (int t = 0; t < ss.run(j); ++t)
            bits.push_back(one && !(j == 1 && t < k - 1));
    }
    return BinarySequence(k, std::move(bits));
}

inline BinarySequence complement_sequence(const BinarySequence& s) {
    std::vector<bool> bits = s.bits();
    for (int i = s.k(); i <= s.n(); ++i) bits[static_cast<std::size_t>(i - 1)] = !bits[static_cast<std::size_t>(i - 1)];
    return BinarySequence(s.k(), std::move(bits));
}

// Sequence of the subhypergraph induced by V - {v_i}; vertices after i shift
// down by one.
inline BinarySequence delete_vertex(const BinarySequence& s, int i) {
    const int k = s.k();
    if (i < 1 || i > s.n())
        throw std::out_of_range("vertex " + std::to_string(i) + " outside 1.." +
                                std::to_string(s.n()));
    if (s.n() - 1 < k - 1)
        throw ValidationError("deleting a vertex would leave fewer than k-1 vertices");
    std::vector<bool> bits = s.bits();
    // The lone edge {v_1..v_k} ending at v_k dies with v_i, and v_k slides
    // into the forced-zero prefix.
    const bool flip_first_one = !s.bit(i) && i <= k - 1 && s.n() >= k && s.bit(k);
    bits.erase(bits.begin() + (i - 1));
    if (flip_first_one) bits[static_cast<std::size_t>(k - 2)] = false;
    return BinarySequence(k, std::move(bits));
}

// Block t containing vertex i.
inline int block_of_vertex(const ShortSequence& ss, int i) {
    if (i < 1 || i > ss.n())
        throw std::out_of_range("vertex " + std::to_string(i) + " outside 1.." +
                                std::to_string(ss.n()));
    int acc = 0;
    for (int t = 1; t <= ss.r(); ++t) {
        acc += ss.run(t);
        if (i <= acc) return t;
    }
    throw InternalError("block_of_vertex: prefix sums exhausted");
}

// Calls f on every valid sequence of length n for uniformity k, in
// lexicographic order of the free bits b_k..b_n.
template <typename F>
void for_each_sequence(int n, int k, F&& f) {
    if (n < k) {
        f(BinarySequence(k, std::vector<bool>(static_cast<std::size_t>(std::max(n, 0)), false)));
        return;
    }
    const int free_bits = n - k + 1;
    if (free_bits >= 63) throw BudgetExceededError("too many sequences to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
        std::vector<bool> bits(static_cast<std::size_t>(n), false);
        for (int t = 0; t < free_bits; ++t)
            bits[static_cast<std::size_t>(k - 1 + t)] = ((mask >> (free_bits - 1 - t)) & 1U) != 0;
        f(BinarySequence(k, std::move(bits)));
    }
}

// ---------------------------------------------------------------------------
// Text forms: `k=K;b1,b2,...,bn` and `C(a1,...,ar)_K`.

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("expected an integer for " + std::string(what) + ", got '" +
                         std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

inline BinarySequence parse_binary(std::string_view text) {
    text = detail::trim(text);
    const auto semi = text.find(';');
    if (text.substr(0, 2) != "k=" || semi == std::string_view::npos)
        throw ParseError("expected 'k=K;b1,b2,...', got '" + std::string(text) + "'");
    const int k = detail::parse_int(text.substr(2, semi - 2), "k");
    std::vector<bool> bits;
    const auto body = detail::trim(text.substr(semi + 1));
    if (!body.empty()) {
        for (auto tok : detail::split(body, ',')) {
            tok = detail::trim(tok);
            if (tok == "0")
                bits.push_back(false);
            else if (tok == "1")
                bits.push_back(true);
            else
                throw ParseError("sequence entries must be 0 or 1, got '" + std::string(tok) + "'");
        }
    }
    return BinarySequence(k, std::move(bits));
}

// The short text form has no b_k marker; it is read as a connected
// hypergraph, so an even run count means b_k = 0 and an odd one b_k = 1.
inline ShortSequence parse_short(std::string_view text) {
    text = detail::trim(text);
    const auto close = text.find(')');
    if (text.substr(0, 2) != "C(" || close == std::string_view::npos ||
        text.substr(close, 2) != ")_")
        throw ParseError("expected 'C(a1,...,ar)_K', got '" + std::string(text) + "'");
    std::vector<int> runs;
    for (auto tok : detail::split(text.substr(2, close - 2), ','))
        runs.push_back(detail::parse_int(tok, "run length"));
    const int k = detail::parse_int(text.substr(close + 2), "k");
    const auto lead = runs.size() % 2 == 0 ? LeadingBlock::kZero : LeadingBlock::kMergedOne;
    return ShortSequence(k, std::move(runs), lead);
}

// Accepts either text form.
inline BinarySequence parse_sequence(std::string_view text) {
    const auto t = detail::trim(text);
    if (t.substr(0, 2) == "C(") return to_binary(parse_short(t));
    return parse_binary(t);
}

inline std::string format_binary(const BinarySequence& s) {
    std::string out = "k=" + std::to_string(s.k()) + ";";
    for (int i = 1; i <= s.n(); ++i) {
        if (i > 1) out += ',';
        out += s.bit(i) ? '1' : '0';
    }
    return out;
}

inline std::string format_short(const ShortSequence& ss) {
    std::string out = "C(";
    for (int j = 1; j <= ss.r(); ++j) {
        if (j > 1) out += ',';
        out += std::to_string(ss.run(j));
    }
    return out + ")_" + std::to_string(ss.k());
}

}  // namespace thyper
