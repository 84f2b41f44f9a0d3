#pragma once

/**
 * @file orbitmap.hpp
 * @brief The correspondence between graded nilpotent classes and parabolic
 *        double cosets: g = 1 + N^t, block-corner rank tables, and the
 *        partial inverse on geometric parameters.
 *
 * Blocks are ordered by strictly decreasing sigma-value, so the nilradical
 * of the block parabolic is block-upper-triangular and the degree-one piece
 * of the grading sits on adjacent blocks with value gap exactly one.
 * Double cosets of concrete matrices are identified by comparing block-
 * corner rank tables against permutation representatives; exact and
 * dependency-free at |W| <= 120.
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "whecke/multisegment.hpp"

namespace whecke {

/// The grading datum of a dominant integral-spaced weight: sigma = lambda+rho
/// coordinates (weakly decreasing) and the maximal equal-value runs.
struct GradedStructure {
    Weight lam;
    std::vector<Rat> sigma_values;                         // weakly decreasing
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // half-open 0-based [a,b)

    std::size_t n() const { return sigma_values.size(); }
    std::size_t block_count() const { return blocks.size(); }
    Rat block_value(std::size_t b) const { return sigma_values[blocks[b].first]; }
    std::size_t block_size(std::size_t b) const { return blocks[b].second - blocks[b].first; }

    /// True when blocks b and b+1 have value gap exactly one.
    bool unit_gap(std::size_t b) const {
        return b + 1 < block_count() && block_value(b) - block_value(b + 1) == 1;
    }

    /// The parabolic set of the stabilizer of sigma (equal adjacent values).
    ParabolicSet parabolic() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i + 1 < n(); ++i)
            if (sigma_values[i] == sigma_values[i + 1]) idx.push_back(i + 1);
        return ParabolicSet(std::move(idx));
    }
};

inline GradedStructure graded_structure(const Weight& lam) {
    const Weight v = lam + Weight::rho(lam.n());
    if (!v.weakly_decreasing())
        throw NotDominantError("graded_structure requires dominant lambda, got lambda+rho = " +
                               v.to_string());
    if (!v.integral_spaced())
        throw NotIntegralSpacedError("graded_structure requires integral-spaced lambda+rho, got " +
                                     v.to_string());
    GradedStructure gs;
    gs.lam = lam;
    gs.sigma_values = v.coords();
    std::size_t start = 0;
    for (std::size_t i = 1; i <= gs.sigma_values.size(); ++i) {
        if (i == gs.sigma_values.size() || gs.sigma_values[i] != gs.sigma_values[start]) {
            gs.blocks.emplace_back(start, i);
            start = i;
        }
    }
    return gs;
}

/// Complete orbit invariant of a degree-one nilpotent: the ranks of all
/// composed chains of adjacent block maps (unit value gaps only), plus the
/// block dimensions on the diagonal.
struct RankProfile {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> chain_ranks;  // 0-based blocks

    std::size_t rank(std::size_t i, std::size_t j) const {
        const auto it = chain_ranks.find({i, j});
        return it == chain_ranks.end() ? 0 : it->second;
    }

    bool operator==(const RankProfile& o) const { return chain_ranks == o.chain_ranks; }
};

namespace detail {

/// The block of N rows in block (b-1), columns in block b, as a Mat.
inline Mat adjacent_block(const Mat& n_mat, const GradedStructure& gs, std::size_t b) {
    const auto [r0, r1] = gs.blocks[b - 1];
    const auto [c0, c1] = gs.blocks[b];
    Mat out(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = n_mat(i, j);
    return out;
}

}  // namespace detail

/**
 * Rank profile of N in the degree-one piece of the grading.  Throws
 * NotGradedOne if N has entries outside the unit-gap block positions.
 */
inline RankProfile rank_profile(const Mat& n_mat, const GradedStructure& gs) {
    const std::size_t n = gs.n();
    std::vector<std::size_t> block_of(n);
    for (std::size_t b = 0; b < gs.block_count(); ++b)
        for (std::size_t i = gs.blocks[b].first; i < gs.blocks[b].second; ++i) block_of[i] = b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (n_mat(i, j) == 0) continue;
            if (gs.sigma_values[i] - gs.sigma_values[j] != 1)
                throw NotGradedOneError("matrix entry outside the degree-one piece at (" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    RankProfile profile;
    for (std::size_t b = 0; b < gs.block_count(); ++b)
        profile.chain_ranks[{b, b}] = gs.block_size(b);
    for (std::size_t i = 0; i < gs.block_count(); ++i) {
        Mat chain;
        for (std::size_t j = i + 1; j < gs.block_count(); ++j) {
            if (!gs.unit_gap(j - 1)) break;
            const Mat step = detail::adjacent_block(n_mat, gs, j);
            chain = (j == i + 1) ? step : Mat(chain * step);
            profile.chain_ranks[{i, j}] = rank(chain);
        }
    }
    return profile;
}

/**
 * Reconstructs the multisegment from a rank profile by inclusion-exclusion
 * on chain ranks: the number of segments spanning blocks i..j is
 *   c_ij = r_ij - r_{i-1,j} - r_{i,j+1} + r_{i-1,j+1},
 * with out-of-range and non-unit-gap ranks saturating to zero.
 */
inline MultisegmentClass multisegment_from_profile(const RankProfile& profile,
                                                   const GradedStructure& gs) {
    const auto r = [&](long i, long j) -> long {
        if (i < 0 || j >= static_cast<long>(gs.block_count()) || i > j) return 0;
        // chains must be glued by unit gaps throughout
        for (long b = i; b < j; ++b)
            if (!gs.unit_gap(static_cast<std::size_t>(b))) return 0;
        return static_cast<long>(
            profile.rank(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    };
    Multisegment tau;
    for (long i = 0; i < static_cast<long>(gs.block_count()); ++i)
        for (long j = i; j < static_cast<long>(gs.block_count()); ++j) {
            const long count = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
            for (long k = 0; k < count; ++k)
                tau.segments.push_back(
                    Segment{gs.block_value(static_cast<std::size_t>(j)), j - i + 1});
        }
    return MultisegmentClass(std::move(tau));
}

/// Block-corner rank table: rank of the lower-left submatrix with rows in
/// blocks >= i and columns in blocks <= j, for all block pairs.
struct CosetRankTable {
    std::vector<std::vector<std::size_t>> corner_ranks;  // [i][j], 0-based blocks

    bool operator==(const CosetRankTable& o) const { return corner_ranks == o.corner_ranks; }
};

inline CosetRankTable coset_rank_table(const Mat& g, const GradedStructure& gs) {
    const std::size_t k = gs.block_count();
    CosetRankTable t;
    t.corner_ranks.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t row0 = gs.blocks[i].first;
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t col1 = gs.blocks[j].second;
            Mat sub(gs.n() - row0, col1);
            for (std::size_t r = row0; r < gs.n(); ++r)
                for (std::size_t c = 0; c < col1; ++c) sub(r - row0, c) = g(r, c);
            t.corner_ranks[i][j] = rank(std::move(sub));
        }
    }
    return t;
}

/// Permutation matrix with M e_j = e_{w(j)}.
inline Mat perm_matrix(const Perm& w) {
    Mat m(w.degree(), w.degree());
    for (std::size_t j = 1; j <= w.degree(); ++j) m(w(j) - 1, j - 1) = 1;
    return m;
}

/**
 * The double coset P w P containing 1 + nilpotent_rep(tau)^t, as a
 * W_lambda-W_lambda double coset.  The support of tau must equal the sigma
 * multiset.  NoMatchingCoset signals an internal consistency failure.
 */
inline DoubleCoset phi(const MultisegmentClass& tau, const GradedStructure& gs) {
    const auto sup = support(tau);
    if (sup != gs.sigma_values)
        throw SupportMismatchError("multisegment support does not match the grading values");
    const Mat n_mat = nilpotent_rep(tau);
    const Mat g = Mat::identity(gs.n()) + n_mat.transpose();
    const CosetRankTable target = coset_rank_table(g, gs);
    const ParabolicSet p = gs.parabolic();
    for (const auto& coset : double_cosets(p, p, gs.n())) {
        if (coset_rank_table(perm_matrix(coset.longest_rep), gs) == target) return coset;
    }
    throw NoMatchingCosetError("no double coset matches the corner rank table of 1 + N^t");
}

/**
 * The partial inverse: the unique tau with phi(tau) = q, or nullopt (the
 * zero marker) when q is outside the image.
 */
inline std::optional<MultisegmentClass> psi(const DoubleCoset& q, const GradedStructure& gs) {
    const Weight lamrho = gs.lam + Weight::rho(gs.n());
    for (const auto& tau : ms_classes(lamrho)) {
        if (phi(tau, gs).longest_rep == q.longest_rep) return tau;
    }
    return std::nullopt;
}

}  // namespace whecke
