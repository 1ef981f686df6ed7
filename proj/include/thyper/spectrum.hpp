#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thyper/combinatorics.hpp"
#include "thyper/error.hpp"
#include "thyper/hypergraph.hpp"
#include "thyper/jacobi.hpp"
#include "thyper/sequences.hpp"

namespace thyper {

inline constexpr double kDefaultMergeTol = 1e-9;
inline constexpr double kDefaultNumericTol = 1e-8;

// ---------------------------------------------------------------------------
// Edge counts behind the block eigenvalues.

namespace detail {

// Edges that contain two fixed vertices preceding block `block` (a block of
// ones) and end inside it: sum over its positions p of C(p-3, k-3).
inline ExactCount edges_ending_in_block(const ShortSequence& ss, int block) {
    ExactCount total{0};
    for (std::int64_t p = ss.prefix(block - 1) + 1; p <= ss.prefix(block); ++p)
        total += binomial(p - 3, ss.k() - 3);
    return total;
}

}  // namespace detail

// N_{2l} for b_k = 0: edges through two vertices of earlier blocks that end in
// the 2l-th block.
inline ExactCount n_even(const ShortSequence& ss, int l) {
    if (ss.lead() != LeadingBlock::kZero) throw ValidationError("n_even applies to b_k = 0 sequences");
    if (l < 1 || 2 * l > ss.r()) throw std::out_of_range("n_even: block 2l outside 1..r");
    return detail::edges_ending_in_block(ss, 2 * l);
}

// N_{2l-1} for b_k = 1. For l = 1 the binomials with negative top vanish, so
// only the edges ending inside the merged first block are counted.
inline ExactCount n_odd(const ShortSequence& ss, int l) {
    if (ss.lead() != LeadingBlock::kMergedOne) throw ValidationError("n_odd applies to b_k = 1 sequences");
    if (l < 1 || 2 * l - 1 > ss.r()) throw std::out_of_range("n_odd: block 2l-1 outside 1..r");
    return detail::edges_ending_in_block(ss, 2 * l - 1);
}

// T_2: edges through two vertices of a block of ones that end in that block,
// C(a_1 + ... + a_block - 2, k - 2). The block is 2t (b_k = 0) or 2t-1 (b_k = 1).
inline ExactCount t2(const ShortSequence& ss, int t) {
    const int block = ss.lead() == LeadingBlock::kZero ? 2 * t : 2 * t - 1;
    if (t < 1 || block > ss.r()) throw std::out_of_range("t2: block outside 1..r");
    return binomial(ss.prefix(block) - 2, ss.k() - 2);
}

// ---------------------------------------------------------------------------
// Block eigenvalues.

enum class BlockFormula {
    kZeroLeadOddBlock,   // b_k = 0, j = 2t-1 (block of zeros)
    kZeroLeadEvenBlock,  // b_k = 0, j = 2t   (block of ones)
    kOneLeadOddBlock,    // b_k = 1, j = 2t-1 (block of ones)
    kOneLeadEvenBlock,   // b_k = 1, j = 2t   (block of zeros)
};

struct BlockEigenvalue {
    std::int64_t value = 0;
    int multiplicity_lower_bound = 0;
    int block_index = 0;
    BlockFormula formula = BlockFormula::kZeroLeadOddBlock;

    friend bool operator==(const BlockEigenvalue&, const BlockEigenvalue&) = default;
};

inline bool connected(const ShortSequence& ss) { return ss.is_one_block(ss.r()); }

inline void require_connected(const ShortSequence& ss) {
    if (!connected(ss)) throw DisconnectedError("disconnected: closed-form spectrum requires b_n=1");
}

// Eigenvalue of block j assembled from N_{2l}, N_{2l-1} and T_2.
inline BlockEigenvalue block_eigenvalue_formula(const ShortSequence& ss, int j) {
    require_connected(ss);
    if (j < 1 || j > ss.r()) throw std::out_of_range("block index outside 1..r");
    BlockEigenvalue be;
    be.block_index = j;
    be.multiplicity_lower_bound = ss.run(j) - 1;
    ExactCount count{0};
    if (ss.lead() == LeadingBlock::kZero) {
        const int m = ss.r() / 2;
        if (j % 2 == 1) {
            const int t = (j + 1) / 2;
            for (int l = t; l <= m; ++l) count += n_even(ss, l);
            be.formula = BlockFormula::kZeroLeadOddBlock;
        } else {
            const int t = j / 2;
            for (int l = t + 1; l <= m; ++l) count += n_even(ss, l);
            count += t2(ss, t);
            be.formula = BlockFormula::kZeroLeadEvenBlock;
        }
    } else {
        const int m = (ss.r() + 1) / 2;
        if (j % 2 == 1) {
            const int t = (j + 1) / 2;
            for (int l = t + 1; l <= m; ++l) count += n_odd(ss, l);
            count += t2(ss, t);
            be.formula = BlockFormula::kOneLeadOddBlock;
        } else {
            const int t = j / 2;
            for (int l = t + 1; l <= m; ++l) count += n_odd(ss, l);
            be.formula = BlockFormula::kOneLeadEvenBlock;
        }
    }
    be.value = negate(count);
    return be;
}

// -a_{s,s+1} with s the first vertex of block j (needs a_j >= 2).
inline std::int64_t block_eigenvalue_pair_count(const ThresholdHypergraph& h, const ShortSequence& ss,
                                                int j) {
    if (j < 1 || j > ss.r() || ss.run(j) < 2)
        throw ValidationError("block " + std::to_string(j) + " has fewer than two vertices");
    const auto s = static_cast<Vertex>(ss.prefix(j - 1) + 1);
    return negate(edge_count_pair(h, s, s + 1));
}

// One entry per block with a_j >= 2. Both routes are evaluated and must agree.
inline std::vector<BlockEigenvalue> block_eigenvalues(const ShortSequence& ss) {
    require_connected(ss);
    const ThresholdHypergraph h(to_binary(ss));
    std::vector<BlockEigenvalue> out;
    for (int j = 1; j <= ss.r(); ++j) {
        if (ss.run(j) < 2) continue;
        auto be = block_eigenvalue_formula(ss, j);
        const auto via_pair = block_eigenvalue_pair_count(h, ss, j);
        if (be.value != via_pair)
            throw InternalError("block " + std::to_string(j) + ": formula gives " +
                                std::to_string(be.value) + " but -a_{s,s+1} = " +
                                std::to_string(via_pair));
        out.push_back(be);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Equitable quotient.

// Block-sum matrix of the block partition. Blocks are 1-indexed like the
// short sequence.
class QuotientMatrix {
public:
    QuotientMatrix(std::vector<int> block_sizes, std::vector<std::vector<ExactCount>> rows)
        : sizes_(std::move(block_sizes)), rows_(std::move(rows)) {
        const auto r = sizes_.size();
        if (rows_.size() != r) throw ValidationError("quotient matrix must be r x r");
        for (const auto& row : rows_)
            if (row.size() != r) throw ValidationError("quotient matrix must be r x r");
        for (int a : sizes_)
            if (a < 1) throw ValidationError("block sizes must be positive");
        for (int i = 1; i <= this->r(); ++i)
            for (int j = i + 1; j <= this->r(); ++j)
                if ((*this)(i, j) * ExactCount(static_cast<std::uint64_t>(size(i))) !=
                    (*this)(j, i) * ExactCount(static_cast<std::uint64_t>(size(j))))
                    throw ValidationError("quotient matrix violates the balance identity");
    }

    [[nodiscard]] int r() const { return static_cast<int>(sizes_.size()); }
    [[nodiscard]] int size(int block) const { return sizes_.at(static_cast<std::size_t>(block - 1)); }
    [[nodiscard]] const std::vector<int>& block_sizes() const { return sizes_; }
    [[nodiscard]] ExactCount operator()(int i, int j) const {
        return rows_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
    }

    friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

private:
    std::vector<int> sizes_;
    std::vector<std::vector<ExactCount>> rows_;
};

inline QuotientMatrix quotient_matrix(const ThresholdHypergraph& h) {
    const auto ss = to_short(h.sequence());
    const auto a = adjacency_closed_form(h);
    const int r = ss.r();
    std::vector<std::vector<ExactCount>> rows(static_cast<std::size_t>(r),
                                              std::vector<ExactCount>(static_cast<std::size_t>(r)));
    for (int bi = 1; bi <= r; ++bi) {
        for (int bj = 1; bj <= r; ++bj) {
            std::optional<ExactCount> common;
            for (auto v = ss.prefix(bi - 1) + 1; v <= ss.prefix(bi); ++v) {
                ExactCount sum{0};
                for (auto c = ss.prefix(bj - 1) + 1; c <= ss.prefix(bj); ++c)
                    sum += a(static_cast<Vertex>(v), static_cast<Vertex>(c));
                if (common && *common != sum)
                    throw InternalError("block (" + std::to_string(bi) + "," + std::to_string(bj) +
                                        ") has non-constant row sums");
                common = sum;
            }
            rows[static_cast<std::size_t>(bi - 1)][static_cast<std::size_t>(bj - 1)] = *common;
        }
    }
    return QuotientMatrix(ss.runs(), std::move(rows));
}

// D^{1/2} B D^{-1/2} with D = diag(block sizes): symmetric and similar to B.
inline DenseMatrix symmetrize_quotient(const QuotientMatrix& q) {
    DenseMatrix s(q.r());
    for (int i = 1; i <= q.r(); ++i)
        for (int j = 1; j <= q.r(); ++j)
            s(i - 1, j - 1) = std::sqrt(static_cast<double>(q.size(i)) / static_cast<double>(q.size(j))) *
                              to_double(q(i, j));
    // Pin exact symmetry; the balance identity makes both halves equal up to
    // the rounding of sqrt.
    for (int i = 0; i < q.r(); ++i)
        for (int j = i + 1; j < q.r(); ++j) s(j, i) = s(i, j);
    return s;
}

// Coefficients c_1..c_r of det(xI - B) = x^r + c_1 x^{r-1} + ... + c_r, exact
// (Faddeev-LeVerrier; every division is exact over the integers).
inline std::vector<std::int64_t> characteristic_polynomial(const QuotientMatrix& q) {
    const int r = q.r();
    using Mat = std::vector<std::vector<__int128>>;
    const auto checked = [](__int128 v) {
        constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
        if (v > kLimit || v < -kLimit) throw OverflowError("characteristic polynomial overflows");
        return v;
    };
    Mat b(static_cast<std::size_t>(r), std::vector<__int128>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<__int128>(q(i + 1, j + 1).value());

    Mat m(static_cast<std::size_t>(r), std::vector<__int128>(static_cast<std::size_t>(r), 0));
    std::vector<std::int64_t> coeffs;
    __int128 c_prev = 1;
    for (int step = 1; step <= r; ++step) {
        for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += c_prev;
        Mat am(static_cast<std::size_t>(r), std::vector<__int128>(static_cast<std::size_t>(r), 0));
        __int128 trace = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                __int128 s = 0;
                for (int t = 0; t < r; ++t)
                    s = checked(s + checked(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                                            m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]));
                am[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
                if (i == j) trace = checked(trace + s);
            }
        if (trace % step != 0) throw InternalError("Faddeev-LeVerrier division is not exact");
        const __int128 c = -trace / step;
        if (c > INT64_MAX || c < INT64_MIN) throw OverflowError("characteristic coefficient exceeds 64 bits");
        coeffs.push_back(static_cast<std::int64_t>(c));
        m = std::move(am);
        c_prev = c;
    }
    return coeffs;
}

// ---------------------------------------------------------------------------
// Spectrum.

enum class SourceKind { kBlock, kQuotient, kNumeric };

struct EigenSource {
    SourceKind kind = SourceKind::kNumeric;
    int block = 0;  // only for kBlock

    [[nodiscard]] std::string label() const {
        switch (kind) {
            case SourceKind::kBlock: return "block " + std::to_string(block);
            case SourceKind::kQuotient: return "quotient";
            case SourceKind::kNumeric: return "numeric";
        }
        return "?";
    }

    friend bool operator==(const EigenSource&, const EigenSource&) = default;
};

struct EigenPair {
    double value = 0.0;
    int multiplicity = 0;
    std::vector<EigenSource> sources;

    [[nodiscard]] std::string source_label() const {
        std::string out;
        for (const auto& s : sources) {
            if (!out.empty()) out += '+';
            out += s.label();
        }
        return out;
    }

    friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

// Distinct eigenvalues with multiplicities, descending.
struct Spectrum {
    std::vector<EigenPair> pairs;
    double merge_tol = kDefaultMergeTol;

    [[nodiscard]] int total_multiplicity() const {
        int m = 0;
        for (const auto& p : pairs) m += p.multiplicity;
        return m;
    }
    // Sum of m_i * lambda_i.
    [[nodiscard]] double trace() const {
        double s = 0.0;
        for (const auto& p : pairs) s += p.multiplicity * p.value;
        return s;
    }
    // Sum of m_i * lambda_i^2.
    [[nodiscard]] double sum_of_squares() const {
        double s = 0.0;
        for (const auto& p : pairs) s += p.multiplicity * p.value * p.value;
        return s;
    }
    // Every eigenvalue repeated by multiplicity, descending.
    [[nodiscard]] std::vector<double> expanded() const {
        std::vector<double> out;
        for (const auto& p : pairs) out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), p.value);
        return out;
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// Sorts descending and merges values within `tol` of their neighbour. A
// cluster holding a closed-form block value takes that exact value,
// otherwise the multiplicity-weighted mean.
inline Spectrum merge_eigenvalues(std::vector<EigenPair> raw, double tol) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
    Spectrum out;
    out.merge_tol = tol;
    std::size_t i = 0;
    while (i < raw.size()) {
        std::size_t end = i + 1;
        while (end < raw.size() && raw[end - 1].value - raw[end].value <= tol) ++end;
        EigenPair merged;
        double weighted = 0.0;
        std::optional<double> exact;
        for (std::size_t t = i; t < end; ++t) {
            merged.multiplicity += raw[t].multiplicity;
            weighted += raw[t].multiplicity * raw[t].value;
            for (const auto& s : raw[t].sources) {
                merged.sources.push_back(s);
                if (s.kind == SourceKind::kBlock && !exact) exact = raw[t].value;
            }
        }
        merged.value = exact ? *exact : weighted / merged.multiplicity;
        if (merged.value == 0.0) merged.value = 0.0;  // drop -0
        std::stable_sort(merged.sources.begin(), merged.sources.end(),
                         [](const EigenSource& a, const EigenSource& b) {
                             if (a.kind != b.kind) return a.kind < b.kind;
                             return a.block < b.block;
                         });
        merged.sources.erase(std::unique(merged.sources.begin(), merged.sources.end()), merged.sources.end());
        out.pairs.push_back(std::move(merged));
        i = end;
    }
    return out;
}

inline std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
    return eigenvalues_symmetric(symmetrize_quotient(q));
}

// Block eigenvalues (multiplicity a_j - 1) plus the r quotient eigenvalues.
inline Spectrum full_spectrum_closed(const ThresholdHypergraph& h, double merge_tol = kDefaultMergeTol) {
    if (!h.sequence().connected())
        throw DisconnectedError("disconnected: closed-form spectrum requires b_n=1");
    const auto ss = to_short(h.sequence());
    std::vector<EigenPair> raw;
    for (const auto& be : block_eigenvalues(ss))
        raw.push_back({static_cast<double>(be.value), be.multiplicity_lower_bound,
                       {{SourceKind::kBlock, be.block_index}}});
    for (double v : quotient_eigenvalues(quotient_matrix(h)))
        raw.push_back({v, 1, {{SourceKind::kQuotient, 0}}});
    auto spec = merge_eigenvalues(std::move(raw), merge_tol);
    if (spec.total_multiplicity() != h.n())
        throw InternalError("closed-form spectrum accounts for " +
                            std::to_string(spec.total_multiplicity()) + " of " +
                            std::to_string(h.n()) + " eigenvalues");
    return spec;
}

inline DenseMatrix to_dense(const AdjacencyMatrix& a) {
    DenseMatrix m(a.n());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j) m(i - 1, j - 1) = to_double(a(i, j));
    return m;
}

// Oracle spectrum from the full n x n matrix. Default clustering tolerance
// is 1e-6 * ||A||_F.
inline Spectrum full_spectrum_numeric(const ThresholdHypergraph& h, std::optional<double> tol = {}) {
    const auto dense = to_dense(adjacency_closed_form(h));
    const double cluster = tol ? *tol : std::max(1e-6 * dense.frobenius(), 1e-12);
    std::vector<EigenPair> raw;
    for (double v : eigenvalues_symmetric(dense)) raw.push_back({v, 1, {{SourceKind::kNumeric, 0}}});
    return merge_eigenvalues(std::move(raw), cluster);
}

inline int distinct_count(const Spectrum& s) { return static_cast<int>(s.pairs.size()); }

// Largest gap between the two spectra as expanded descending lists.
inline double max_deviation(const Spectrum& a, const Spectrum& b) {
    const auto x = a.expanded();
    const auto y = b.expanded();
    if (x.size() != y.size()) throw ValidationError("spectra have different total multiplicity");
    double dev = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dev = std::max(dev, std::abs(x[i] - y[i]));
    return dev;
}

}  // namespace thyper
