#pragma once

/**
 * @file functor.hpp
 * @brief The tensor-space Hecke action on M(mu) (x) V^{(x) l} and the exact
 *        functor it induces on central-character blocks.
 *
 * Omega_{i,j} is the dual-basis sum sum_E E_(i) E*_(j) over the matrix-unit
 * dual pairs of gl_n = sl_n + center; with the Verma factor normalized to
 * coordinate sum zero the center contributes nothing on slot-0 pairs, so
 * those sums coincide with the pure sl_n dual pairs, while on slot-slot
 * pairs the center term is required for the defining relations (s^2 = 1)
 * to hold.  Theta(s_i) = -Omega_{i,i+1} and
 * Theta(eps_k) = (n-1)/2 + sum_{0 <= j < k} Omega_{j,k}, constants exactly
 * as printed, no renormalization.
 *
 * Whittaker-side functor values on standard modules are obtained through
 * the completion isomorphism, which identifies them with the category-O
 * computation at the longest double-coset representative; nothing
 * infinite-dimensional is ever materialized.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whecke/heckemod.hpp"
#include "whecke/orbitmap.hpp"
#include "whecke/verma.hpp"

namespace whecke {

/// Matrix of Omega_{i,j} on the block, slots 1..l, slot 0 = Verma factor.
inline Mat omega_matrix(const TensorBlock& tb, std::size_t i, std::size_t j) {
    if (i >= j || j > static_cast<std::size_t>(tb.strands()))
        throw Error("omega requires 0 <= i < j <= l");
    const std::size_t n = tb.n();
    Mat total(tb.dim(), tb.dim());
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
            total = total + tb.to_matrix([&](const TensorVec& v) {
                const TensorVec inner = tb.act_slot(b, a, j, v);
                return i == 0 ? tb.act_verma(a, b, inner) : tb.act_slot(a, b, i, inner);
            });
        }
    return total;
}

/// The Theta matrices on a tensor block: Theta(s_i) and Theta(eps_k).
struct ThetaAction {
    std::vector<Mat> s_mats;    // Theta(s_i) = -Omega_{i,i+1}, 1 <= i < l
    std::vector<Mat> eps_mats;  // Theta(eps_k) = (n-1)/2 + sum_{j<k} Omega_{j,k}
};

inline ThetaAction theta_action(const TensorBlock& tb) {
    const std::size_t l = static_cast<std::size_t>(tb.strands());
    const std::size_t n = tb.n();
    ThetaAction theta;
    for (std::size_t i = 1; i < l; ++i)
        theta.s_mats.push_back(omega_matrix(tb, i, i + 1) * Rat(-1));
    for (std::size_t k = 1; k <= l; ++k) {
        Mat m = Mat::identity(tb.dim()) * Rat(static_cast<long>(n) - 1, 2);
        for (std::size_t j = 0; j < k; ++j) m = m + omega_matrix(tb, j, k);
        theta.eps_mats.push_back(std::move(m));
    }
    return theta;
}

/// A functor value together with its source parameters.
struct FunctorValue {
    Weight mu;
    Weight lam;
    long l = 0;
    std::optional<ParabolicSet> eta;  // set when reached through a Whittaker parameter
    HModule module;
};

/**
 * F_{l,lambda}(M(mu)) = the lambda block of M(mu) (x) V^{(x) l} with the
 * Theta action, packaged as a verified module.  Zero when lambda - mu is
 * not a weight of V^{(x) l}; that vanishing is computed, not special-cased.
 */
inline FunctorValue functor_value_verma(const Weight& mu, const Weight& lam, long l) {
    if (!is_dominant(lam))
        throw NotDominantError("functor requires dominant lambda, got " + lam.to_string());
    const TensorBlock tb(mu, lam, l);
    const Subspace proj = block_projection(tb);
    const ThetaAction theta = theta_action(tb);

    FunctorValue fv;
    fv.mu = mu;
    fv.lam = lam;
    fv.l = l;
    fv.module.l = static_cast<std::size_t>(l);
    fv.module.dim = proj.dim();
    try {
        for (const auto& m : theta.s_mats) fv.module.s_mats.push_back(restrict_to(m, proj));
        for (const auto& m : theta.eps_mats) fv.module.eps_mats.push_back(restrict_to(m, proj));
    } catch (const Error&) {
        throw RelationCheckFailedError(
            "central-character projection is not Theta-stable; implementation bug");
    }
    check_relations(fv.module);
    return fv;
}

/// Comparison of a functor value with the corresponding induced standard.
struct StandardComparison {
    bool isomorphic = false;
    MultisegmentClass tau;         // the parameter delta_{lambda,mu}
    std::optional<Mat> witness;
    std::string certificate;
    std::optional<Rat> central_shift;  // set if the failure is a pure eps shift
};

/**
 * Verifies the functor value against induced_standard(delta(lambda,mu,l))
 * with an explicit invertible intertwiner.  If the comparison fails by a
 * global scalar shift on the eps generators only, the shift is reported,
 * never silently corrected.
 */
inline StandardComparison compare_to_standard(const FunctorValue& fv) {
    if (fv.module.dim == 0) throw Error("compare_to_standard requires a nonzero functor value");
    StandardComparison cmp;
    cmp.tau = delta(fv.lam, fv.mu, fv.l);
    const HModule std_mod = induced_standard(cmp.tau, static_cast<std::size_t>(fv.l));
    IsoResult iso = is_isomorphic(fv.module, std_mod);
    cmp.isomorphic = iso.isomorphic;
    cmp.witness = std::move(iso.witness);
    cmp.certificate = std::move(iso.certificate);
    if (!cmp.isomorphic && fv.module.dim == std_mod.dim && fv.module.dim > 0) {
        // Diagnose a central-element shift: trace difference per strand.
        Rat tr_fv = 0, tr_std = 0;
        for (std::size_t k = 0; k < fv.module.l; ++k)
            for (std::size_t i = 0; i < fv.module.dim; ++i) {
                tr_fv += fv.module.eps_mats[k](i, i);
                tr_std += std_mod.eps_mats[k](i, i);
            }
        const Rat shift = (tr_std - tr_fv) / (Rat(static_cast<long>(fv.module.l)) *
                                              Rat(static_cast<long>(fv.module.dim)));
        if (shift != 0) {
            HModule shifted = fv.module;
            for (auto& e : shifted.eps_mats) e = e + Mat::identity(shifted.dim) * shift;
            if (is_isomorphic(shifted, std_mod).isomorphic) cmp.central_shift = shift;
        }
    }
    return cmp;
}

/**
 * Functor value on the standard Whittaker module of a double coset, under
 * the equal-stabilizer hypothesis Pi_eta = stabilizer(lambda): computed as
 * the category-O value at the longest coset representative and tagged with
 * the Whittaker parameter.
 */
inline FunctorValue whittaker_functor_value(const DoubleCoset& y, const Weight& lam, long l,
                                            const ParabolicSet& eta) {
    if (!(eta == stabilizer(lam)))
        throw HypothesisViolatedError("requires Pi_eta = {i : (lambda+rho)_i = (lambda+rho)_{i+1}}");
    const Weight mu = dot_action(y.longest_rep, lam);
    FunctorValue fv = functor_value_verma(mu, lam, l);
    fv.eta = eta;
    return fv;
}

}  // namespace whecke
