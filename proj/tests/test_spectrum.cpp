#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "thyper/spectrum.hpp"

using namespace thyper;

namespace {

ThresholdHypergraph hyper(const char* text) { return ThresholdHypergraph(parse_sequence(text)); }

void expect_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

template <typename F>
void for_connected(int n_max, F f) {
    for (int k = 2; k <= n_max; ++k)
        for (int n = k; n <= n_max; ++n)
            for_each_sequence(n, k, [&](const BinarySequence& s) {
                if (s.connected()) f(s);
            });
}

}  // namespace

TEST(EdgeCountFormulas, NEven) {
    EXPECT_EQ(n_even(parse_short("C(4,1)_3"), 1), ExactCount{1});
    EXPECT_EQ(n_even(parse_short("C(4,2)_3"), 1), ExactCount{2});

    // Formula-level evaluation on runs (3,2) with k = 4: the two terms are
    // C(1,1) + C(2,1). The same count is edges of (k=4;0,0,0,1,1) through
    // vertices 1,2 that end at 4 or 5.
    const ShortSequence runs(4, {3, 2}, LeadingBlock::kZero);
    EXPECT_EQ(n_even(runs, 1), ExactCount{3});
    EXPECT_EQ(oracle::pair_edges_ending_in({false, false, false, true, true}, 4, 1, 2, 4, 5), 3U);

    EXPECT_THROW(n_even(parse_short("C(3,1,1)_3"), 1), ValidationError);
    EXPECT_THROW(n_even(parse_short("C(4,1)_3"), 2), std::out_of_range);
}

TEST(EdgeCountFormulas, NOdd) {
    const auto ss = parse_short("C(3,1,1)_3");
    EXPECT_EQ(n_odd(ss, 2), ExactCount{1});
    EXPECT_EQ(n_odd(ss, 1), ExactCount{1});
    const std::vector<bool> bits{false, false, true, false, true};
    EXPECT_EQ(oracle::pair_edges_ending_in(bits, 3, 1, 2, 1, 3), 1U);
    EXPECT_EQ(oracle::pair_edges_ending_in(bits, 3, 1, 2, 5, 5), 1U);

    // C(k, n-k-1, 1)_k: the last block gives C(n-3, k-3).
    for (int k = 3; k <= 7; ++k)
        for (int n = k + 2; n <= 12; ++n) {
            const ShortSequence fam3(k, {k, n - k - 1, 1}, LeadingBlock::kMergedOne);
            EXPECT_EQ(n_odd(fam3, 2), binomial(n - 3, k - 3)) << n << "," << k;
        }
    EXPECT_THROW(n_odd(parse_short("C(4,1)_3"), 1), ValidationError);
}

TEST(EdgeCountFormulas, T2) {
    EXPECT_EQ(t2(parse_short("C(3,2)_3"), 1), ExactCount{3});
    EXPECT_EQ(t2(parse_short("C(2,2)_2"), 1), ExactCount{1});
    for (int k = 3; k <= 7; ++k)
        for (int n = k + 2; n <= 12; ++n) {
            const ShortSequence fam3(k, {k, n - k - 1, 1}, LeadingBlock::kMergedOne);
            EXPECT_EQ(t2(fam3, 2), binomial(n - 2, k - 2));
        }
}

TEST(BlockEigenvalues, Examples) {
    const auto f1 = block_eigenvalues(parse_short("C(4,1)_3"));
    ASSERT_EQ(f1.size(), 1U);
    EXPECT_EQ(f1[0].value, -1);
    EXPECT_EQ(f1[0].multiplicity_lower_bound, 3);
    EXPECT_EQ(f1[0].block_index, 1);

    const auto f2 = block_eigenvalues(parse_short("C(3,2)_3"));
    ASSERT_EQ(f2.size(), 2U);
    EXPECT_EQ(f2[0].value, -2);
    EXPECT_EQ(f2[0].multiplicity_lower_bound, 2);
    EXPECT_EQ(f2[1].value, -3);
    EXPECT_EQ(f2[1].multiplicity_lower_bound, 1);
    EXPECT_EQ(f2[1].block_index, 2);

    const auto f3 = block_eigenvalues(parse_short("C(3,1,1)_3"));
    ASSERT_EQ(f3.size(), 1U);
    EXPECT_EQ(f3[0].value, -2);
    EXPECT_EQ(f3[0].multiplicity_lower_bound, 2);

    EXPECT_THROW(block_eigenvalues(to_short(parse_binary("k=3;0,0,1,0,0"))), DisconnectedError);
}

TEST(BlockEigenvalues, ValueIsMinusPairCountEverywhere) {
    int blocks = 0;
    for_connected(10, [&](const BinarySequence& s) {
        const auto ss = to_short(s);
        const auto bits = s.bits();
        for (const auto& be : block_eigenvalues(ss)) {
            const int v = static_cast<int>(ss.prefix(be.block_index - 1)) + 1;
            const auto a = oracle::pair_edges_ending_in(bits, s.k(), v, v + 1, 1, s.n());
            ASSERT_EQ(be.value, -static_cast<std::int64_t>(a)) << format_binary(s) << " block " << be.block_index;
            ASSERT_EQ(be.multiplicity_lower_bound, ss.run(be.block_index) - 1);
            ++blocks;
        }
    });
    EXPECT_GT(blocks, 1000);
}

TEST(QuotientMatrix, Examples) {
    const auto expect_rows = [](const QuotientMatrix& q, const std::vector<std::vector<std::uint64_t>>& rows) {
        ASSERT_EQ(q.r(), static_cast<int>(rows.size()));
        for (int i = 1; i <= q.r(); ++i)
            for (int j = 1; j <= q.r(); ++j) EXPECT_EQ(q(i, j).value(), rows[i - 1][j - 1]) << i << "," << j;
    };
    expect_rows(quotient_matrix(hyper("k=3;0,0,0,0,1")), {{3, 3}, {12, 0}});
    expect_rows(quotient_matrix(hyper("k=3;0,0,0,1,1")), {{4, 6}, {9, 3}});
    expect_rows(quotient_matrix(hyper("k=3;0,0,1,0,1")), {{4, 1, 3}, {3, 0, 3}, {9, 3, 0}});
}

TEST(QuotientMatrix, RejectsUnbalanced) {
    using C = ExactCount;
    EXPECT_THROW(QuotientMatrix({4, 1}, {{C{3}, C{3}}, {C{11}, C{0}}}), ValidationError);
    EXPECT_THROW(QuotientMatrix({4, 1}, {{C{3}, C{3}}}), ValidationError);
}

TEST(Symmetrize, Examples) {
    const auto s1 = symmetrize_quotient(quotient_matrix(hyper("k=3;0,0,0,0,1")));
    EXPECT_DOUBLE_EQ(s1(0, 0), 3.0);
    EXPECT_DOUBLE_EQ(s1(0, 1), 6.0);
    EXPECT_DOUBLE_EQ(s1(1, 0), 6.0);
    EXPECT_DOUBLE_EQ(s1(1, 1), 0.0);

    const auto s2 = symmetrize_quotient(quotient_matrix(hyper("k=3;0,0,0,1,1")));
    EXPECT_NEAR(s2(0, 1), std::sqrt(54.0), 1e-12);
    EXPECT_EQ(s2(0, 1), s2(1, 0));
    expect_values(eigenvalues_symmetric(s2), oracle::quadratic_roots(-7.0, -42.0), 1e-12);

    using C = ExactCount;
    const auto d = symmetrize_quotient(QuotientMatrix({2, 3}, {{C{5}, C{0}}, {C{0}, C{7}}}));
    EXPECT_EQ(d(0, 0), 5.0);
    EXPECT_EQ(d(1, 1), 7.0);
    EXPECT_EQ(d(0, 1), 0.0);
}

TEST(Jacobi, Examples) {
    expect_values(eigenvalues_symmetric(DenseMatrix{{0, 1}, {1, 0}}), {1.0, -1.0}, 1e-14);
    expect_values(eigenvalues_symmetric(DenseMatrix{{3, 6}, {6, 0}}),
                  {(3 + std::sqrt(153.0)) / 2, (3 - std::sqrt(153.0)) / 2}, 1e-12);
    expect_values(eigenvalues_symmetric(DenseMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), {1, 1, 1}, 0.0);
    EXPECT_THROW(eigenvalues_symmetric(DenseMatrix{{0, 1}, {2, 0}}), ValidationError);
}

TEST(Jacobi, MatchesCubicFormula) {
    // Third-family quotient with n=5, k=3, symmetrized.
    const auto q = quotient_matrix(hyper("k=3;0,0,1,0,1"));
    std::vector<std::vector<double>> b(3, std::vector<double>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = to_double(q(i + 1, j + 1));
    const auto c = oracle::charpoly_small(b);
    expect_values(eigenvalues_symmetric(symmetrize_quotient(q)), oracle::cubic_roots(c[0], c[1], c[2]), 1e-10);
}

TEST(CharacteristicPolynomial, Examples) {
    EXPECT_EQ(characteristic_polynomial(quotient_matrix(hyper("k=3;0,0,0,1,1"))),
              (std::vector<std::int64_t>{-7, -42}));
    EXPECT_EQ(characteristic_polynomial(quotient_matrix(hyper("k=3;0,0,0,0,1"))),
              (std::vector<std::int64_t>{-3, -36}));
    const auto q3 = quotient_matrix(hyper("k=3;0,0,1,0,1"));
    std::vector<std::vector<double>> b(3, std::vector<double>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = to_double(q3(i + 1, j + 1));
    const auto ref = oracle::charpoly_small(b);
    const auto got = characteristic_polynomial(q3);
    ASSERT_EQ(got.size(), 3U);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(static_cast<double>(got[i]), ref[i]);
}

TEST(CharacteristicPolynomial, AgreesWithCofactorsForSmallR) {
    for_connected(10, [&](const BinarySequence& s) {
        const auto q = quotient_matrix(ThresholdHypergraph(s));
        if (q.r() < 2 || q.r() > 3) return;
        std::vector<std::vector<double>> b(q.r(), std::vector<double>(q.r()));
        for (int i = 0; i < q.r(); ++i)
            for (int j = 0; j < q.r(); ++j) b[i][j] = to_double(q(i + 1, j + 1));
        const auto ref = oracle::charpoly_small(b);
        const auto got = characteristic_polynomial(q);
        for (int i = 0; i < q.r(); ++i) ASSERT_EQ(static_cast<double>(got[i]), ref[i]) << format_binary(s);

        // Symmetrized eigenvalues are roots of the exact polynomial.
        const auto ev = eigenvalues_symmetric(symmetrize_quotient(q));
        const auto roots = q.r() == 2 ? oracle::quadratic_roots(ref[0], ref[1])
                                      : oracle::cubic_roots(ref[0], ref[1], ref[2]);
        double scale = 1.0;
        for (double v : roots) scale = std::max(scale, std::abs(v));
        for (int i = 0; i < q.r(); ++i) ASSERT_NEAR(ev[i], roots[i], 1e-7 * scale) << format_binary(s);
    });
}

TEST(FullSpectrum, WorkedExamples) {
    // Published two-decimal values.
    const auto s1 = full_spectrum_closed(hyper("k=3;0,0,0,0,1"));
    expect_values(s1.expanded(), {7.68, -1, -1, -1, -4.68}, 5e-3);
    const auto s2 = full_spectrum_closed(hyper("k=3;0,0,0,1,1")).expanded();
    expect_values({s2[1], s2[2], s2[3]}, {-2, -2, -3}, 1e-12);
    // 10.86 and -3.86 are (7 +- sqrt 217)/2 truncated, not rounded: both sit
    // 0.00546 from the exact roots.
    EXPECT_EQ(std::trunc(s2[0] * 100), 1086);
    EXPECT_EQ(std::trunc(s2[4] * 100), -386);
    EXPECT_NEAR(std::abs(s2[0] - 10.86), 0.00546, 1e-5);
    const auto s3 = full_spectrum_closed(hyper("k=3;0,0,1,0,1"));
    expect_values(s3.expanded(), {8.71, -0.49, -2, -2, -4.22}, 5e-3 + 1e-9);
}

TEST(FullSpectrum, ExactQuadraticValues) {
    const auto s1 = full_spectrum_closed(hyper("k=3;0,0,0,0,1"));
    expect_values(s1.expanded(), {(3 + std::sqrt(153.0)) / 2, -1, -1, -1, (3 - std::sqrt(153.0)) / 2}, 1e-10);
    ASSERT_EQ(s1.pairs.size(), 3U);
    EXPECT_EQ(s1.pairs[1].multiplicity, 3);
    EXPECT_EQ(s1.pairs[1].source_label(), "block 1");
    EXPECT_EQ(s1.pairs[0].source_label(), "quotient");

    const auto s2 = full_spectrum_closed(hyper("k=3;0,0,0,1,1"));
    expect_values(s2.expanded(), {(7 + std::sqrt(217.0)) / 2, -2, -2, -3, (7 - std::sqrt(217.0)) / 2}, 1e-10);
}

TEST(FullSpectrum, LargerSequencesMatchReference) {
    // Reference eigenvalues from an independent dense eigensolver.
    const auto a = full_spectrum_closed(hyper("C(5,2,1,3,3,1)_3"));
    expect_values(a.expanded(),
                  {104.535814328727, 11.947264381512, -0.170716713855, -1, -1, -6, -6, -6, -6, -9, -10, -10,
                   -12.06695356335, -18.526362770062, -30.719045662972},
                  1e-9);
    const auto b = full_spectrum_closed(hyper("C(7,1,2,3,1)_4"));
    expect_values(b.expanded(),
                  {442.379662007304, 35.182780116875, -11, -11, -14.864854227318, -34, -34, -34, -34, -34, -34,
                   -39, -53.174541878838, -144.523046018023},
                  1e-9);
    const auto c = full_spectrum_closed(hyper("k=2;0,1,0,1,1,0,1"));
    expect_values(c.expanded(),
                  {4.474147762455, 0.509951425129, 0.327549008929, -1, -1, -1.399741980816, -1.911906215696}, 1e-9);
}

TEST(FullSpectrum, NumericOracleExamples) {
    const auto s = full_spectrum_numeric(hyper("k=4;0,0,0,1"));
    ASSERT_EQ(s.pairs.size(), 2U);
    EXPECT_NEAR(s.pairs[0].value, 3.0, 1e-12);
    EXPECT_EQ(s.pairs[0].multiplicity, 1);
    EXPECT_NEAR(s.pairs[1].value, -1.0, 1e-12);
    EXPECT_EQ(s.pairs[1].multiplicity, 3);
    EXPECT_EQ(s.pairs[1].source_label(), "numeric");

    const auto g = full_spectrum_numeric(hyper("k=2;0,1"));
    expect_values(g.expanded(), {1, -1}, 1e-14);
}

TEST(FullSpectrum, RejectsDisconnected) {
    EXPECT_THROW(full_spectrum_closed(hyper("k=3;0,0,0")), DisconnectedError);
    EXPECT_THROW(full_spectrum_closed(hyper("k=3;0,0,1,1,0")), DisconnectedError);
}

TEST(FullSpectrum, DistinctCounts) {
    EXPECT_EQ(distinct_count(full_spectrum_closed(hyper("k=3;0,0,0,0,1"))), 3);
    EXPECT_EQ(distinct_count(full_spectrum_closed(hyper("k=3;0,0,0,1,1"))), 4);
    EXPECT_EQ(distinct_count(full_spectrum_closed(hyper("k=3;0,0,1,0,1"))), 4);
}

TEST(FullSpectrum, ClosedFormMatchesOracleAndMoments) {
    int count = 0;
    for_connected(9, [&](const BinarySequence& s) {
        const ThresholdHypergraph h(s);
        const auto closed = full_spectrum_closed(h);
        const auto numeric = full_spectrum_numeric(h);
        ASSERT_EQ(closed.total_multiplicity(), s.n());
        ASSERT_LT(max_deviation(closed, numeric), 1e-8) << format_binary(s);
        ASSERT_LE(distinct_count(closed), s.n() - s.k() + 2) << format_binary(s);

        const auto a = adjacency_closed_form(h);
        const double fro2 = static_cast<double>(a.frobenius_squared().value());
        ASSERT_NEAR(closed.trace(), 0.0, 1e-8) << format_binary(s);
        ASSERT_NEAR(closed.sum_of_squares(), fro2, 1e-6 * fro2) << format_binary(s);
        ++count;
    });
    EXPECT_EQ(count, 502);
}

TEST(MergeEigenvalues, ExactBlockValueWins) {
    std::vector<EigenPair> raw{{-2.0, 2, {{SourceKind::kBlock, 1}}},
                               {-2.0 + 1e-12, 1, {{SourceKind::kQuotient, 0}}},
                               {5.0, 1, {{SourceKind::kQuotient, 0}}}};
    const auto s = merge_eigenvalues(raw, 1e-9);
    ASSERT_EQ(s.pairs.size(), 2U);
    EXPECT_EQ(s.pairs[0].value, 5.0);
    EXPECT_EQ(s.pairs[1].value, -2.0);
    EXPECT_EQ(s.pairs[1].multiplicity, 3);
    EXPECT_EQ(s.pairs[1].source_label(), "block 1+quotient");
}

TEST(MaxDeviation, ComparesExpandedMultisets) {
    const auto a = full_spectrum_closed(hyper("k=3;0,0,0,0,1"));
    EXPECT_EQ(max_deviation(a, a), 0.0);
    auto b = a;
    b.pairs[0].value += 0.5;
    EXPECT_NEAR(max_deviation(a, b), 0.5, 1e-12);
}
