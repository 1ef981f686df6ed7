#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "thyper/combinatorics.hpp"
#include "thyper/error.hpp"
#include "thyper/sequences.hpp"
#include "thyper/spectrum.hpp"

namespace thyper {

// Three infinite families with few distinct eigenvalues:
//   1: (0,...,0,1)_k               -> C(n-1, 1)_k
//   2: (0,...,0,1,...,1)_k, first 1 at position j -> C(j-1, n-j+1)_k
//   3: (0,...,0,1,0,...,0,1)_k     -> C(k, n-k-1, 1)_k
struct FamilyParams {
    int family = 1;
    int n = 0;
    int k = 0;
    std::optional<int> j;  // family 2 only
};

namespace detail {

inline void check_family(const FamilyParams& p) {
    if (p.k < 2) throw ValidationError("uniformity k must be at least 2");
    switch (p.family) {
        case 1:
            if (p.n < p.k) throw ValidationError("family 1 requires k <= n");
            break;
        case 2:
            if (!p.j) throw ValidationError("family 2 requires the position j of the first 1");
            if (*p.j < p.k || *p.j > p.n - 1) throw ValidationError("family 2 requires k <= j <= n-1");
            break;
        case 3:
            if (p.n < p.k + 2) throw ValidationError("family 3 requires n >= k+2");
            break;
        default:
            throw ValidationError("family must be 1, 2 or 3");
    }
}

}  // namespace detail

inline BinarySequence family_binary(const FamilyParams& p) {
    detail::check_family(p);
    std::vector<bool> bits(static_cast<std::size_t>(p.n), false);
    switch (p.family) {
        case 1: bits.back() = true; break;
        case 2:
            for (int i = *p.j; i <= p.n; ++i) bits[static_cast<std::size_t>(i - 1)] = true;
            break;
        case 3:
            bits[static_cast<std::size_t>(p.k - 1)] = true;
            bits.back() = true;
            break;
    }
    return BinarySequence(p.k, std::move(bits));
}

// When the first 1 lands on position k (family 1 with n = k, family 2 with
// j = k) the hypergraph is complete and its short form is C(n)_k.
inline ShortSequence family_sequence(const FamilyParams& p) { return to_short(family_binary(p)); }

// Spectrum from each family's explicit block eigenvalues and quotient.
// The 2 x 2 quotients are solved by the quadratic formula, the 3 x 3 one
// through the symmetrized quotient.
inline Spectrum family_spectrum_symbolic(const FamilyParams& p, double merge_tol = kDefaultMergeTol) {
    detail::check_family(p);
    const int n = p.n;
    const int k = p.k;
    const ExactCount b = binomial(n - 2, k - 2);
    std::vector<EigenPair> raw;
    const auto add_block = [&raw](ExactCount count, int mult, int block) {
        if (mult > 0)
            raw.push_back({static_cast<double>(negate(count)), mult, {{SourceKind::kBlock, block}}});
    };
    const auto add_quadratic = [&raw](double trace, double det) {
        // x^2 - trace x + det; real roots since B is similar to a symmetric matrix.
        const double disc = std::sqrt(std::max(trace * trace - 4.0 * det, 0.0));
        const double big = trace >= 0 ? (trace + disc) / 2.0 : (trace - disc) / 2.0;
        // big == 0 forces trace = disc = 0, so both roots vanish.
        const double small = big != 0.0 ? det / big : 0.0;
        raw.push_back({big, 1, {{SourceKind::kQuotient, 0}}});
        raw.push_back({small, 1, {{SourceKind::kQuotient, 0}}});
    };

    switch (p.family) {
        case 1: {
            const ExactCount a = binomial(n - 3, k - 3);
            add_block(a, n - 2, 1);
            const double da = to_double(a);
            const double db = to_double(b);
            // f(x) = x^2 - a(n-2)x - b^2(n-1)
            add_quadratic(da * (n - 2), -db * db * (n - 1));
            break;
        }
        case 2: {
            const int q = n + 1 - *p.j;
            ExactCount a{0};
            for (int i = 1; i <= q; ++i) a += binomial(n - (i + 2), k - 3);
            add_block(a, n - q - 1, 1);
            add_block(b, q - 1, 2);
            const double da = to_double(a);
            const double db = to_double(b);
            // f(x) = x^2 - x(a(n-q-1) + b(q-1)) + a(n-q-1)b(q-1) - b^2 q(n-q)
            const double d11 = da * (n - q - 1);
            const double d22 = db * (q - 1);
            add_quadratic(d11 + d22, d11 * d22 - db * db * q * (n - q));
            break;
        }
        case 3: {
            const ExactCount a = binomial(n - 3, k - 3);
            const ExactCount a1 = a + ExactCount{1};
            add_block(a1, k - 1, 1);
            add_block(a, n - k - 2, 2);
            const auto u = [](std::int64_t v) { return ExactCount(static_cast<std::uint64_t>(v)); };
            const QuotientMatrix quotient(
                {k, n - k - 1, 1},
                {{a1 * u(k - 1), a * u(n - k - 1), b},
                 {a * u(k), a * u(n - k - 2), b},
                 {b * u(k), b * u(n - k - 1), ExactCount{0}}});
            for (double v : quotient_eigenvalues(quotient)) raw.push_back({v, 1, {{SourceKind::kQuotient, 0}}});
            break;
        }
    }
    return merge_eigenvalues(std::move(raw), merge_tol);
}

}  // namespace thyper
