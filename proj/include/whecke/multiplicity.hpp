#pragma once

/**
 * @file multiplicity.hpp
 * @brief Multiplicity matrices of standard modules in irreducibles on both
 *        sides of the correspondence, and the cross-side verifications.
 *
 * Whittaker side: entries are Kazhdan-Lusztig evaluations P_{w,y}(1) over
 * double cosets indexed by longest representatives.  The representative
 * convention for the row index (standards are constant on cosets) is the
 * longest-element normalization; it is validated against the Hecke side
 * rather than trusted.
 *
 * Hecke side: entries are computed composition multiplicities of the
 * induced standards, with irreducibles identified by weight-spectrum
 * signatures; a signature collision is a hard stop, never silently
 * resolved.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "whecke/functor.hpp"
#include "whecke/kl.hpp"

namespace whecke {

/// A central-character block: rank, dominant integral weight, nilradical
/// character given by its simple-root support.
struct BlockParams {
    std::size_t n = 0;
    Weight lam;
    ParabolicSet eta;
};

/// Integer decomposition matrix of standards into irreducibles.  Rows and
/// columns carry the same parameter list; the index order refines the
/// closure order, making the matrix unitriangular.
struct MultiplicityMatrix {
    std::vector<DoubleCoset> coset_params;        // Whittaker side
    std::vector<MultisegmentClass> ms_params;     // Hecke side
    std::vector<std::vector<long long>> entries;  // [row std][col irr]

    std::size_t size() const { return entries.size(); }

    bool unitriangular() const {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i][i] != 1) return false;
            for (std::size_t j = 0; j < i; ++j)
                if (entries[i][j] != 0) return false;
        }
        return true;
    }
};

/// Double cosets of the block, ordered by (length of longest rep, lex);
/// this order refines the Bruhat order on longest representatives.
inline std::vector<DoubleCoset> block_cosets(const BlockParams& bp) {
    std::vector<DoubleCoset> cosets = double_cosets(bp.eta, stabilizer(bp.lam), bp.n);
    std::sort(cosets.begin(), cosets.end(), [](const DoubleCoset& a, const DoubleCoset& b) {
        const auto la = a.longest_rep.length(), lb = b.longest_rep.length();
        if (la != lb) return la < lb;
        return a.longest_rep < b.longest_rep;
    });
    return cosets;
}

/**
 * [std(w.lambda) : irr(y.lambda)] = P_{w,y}(1) over the double cosets of
 * the block, both indices normalized to longest representatives; zero when
 * y is not above w in Bruhat order.
 */
inline MultiplicityMatrix whittaker_mult_matrix(const BlockParams& bp, KLTable& kl) {
    if (!is_dominant(bp.lam))
        throw NotDominantError("whittaker_mult_matrix requires dominant lambda");
    MultiplicityMatrix m;
    m.coset_params = block_cosets(bp);
    const std::size_t k = m.coset_params.size();
    m.entries.assign(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Perm& w = m.coset_params[i].longest_rep;
            const Perm& y = m.coset_params[j].longest_rep;
            if (!kl.leq(w, y)) continue;
            m.entries[i][j] = kl.kl_polynomial(w, y).eval_at_one();
        }
    return m;
}

/// Multisegment classes of the block ordered through the coset map, so the
/// two sides share one index order.
inline std::vector<MultisegmentClass> block_classes(const BlockParams& bp,
                                                    const GradedStructure& gs) {
    std::vector<MultisegmentClass> classes = ms_classes(bp.lam + Weight::rho(bp.n));
    std::vector<std::pair<Perm, MultisegmentClass>> keyed;
    for (const auto& tau : classes) keyed.emplace_back(phi(tau, gs).longest_rep, tau);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        const auto la = a.first.length(), lb = b.first.length();
        if (la != lb) return la < lb;
        return a.first < b.first;
    });
    classes.clear();
    for (auto& [w, tau] : keyed) classes.push_back(std::move(tau));
    return classes;
}

/**
 * [std(tau) : irr(gamma)] from explicit composition series of the induced
 * standards, irreducibles identified by the weight-spectrum signatures of
 * the standards' heads.  AmbiguousFactorSignature when two heads collide.
 */
inline MultiplicityMatrix hecke_mult_matrix(const BlockParams& bp) {
    if (!is_dominant(bp.lam))
        throw NotDominantError("hecke_mult_matrix requires dominant lambda");
    const GradedStructure gs = graded_structure(bp.lam);
    MultiplicityMatrix m;
    m.ms_params = block_classes(bp, gs);
    const std::size_t k = m.ms_params.size();

    std::vector<HModule> standards;
    std::vector<FactorSignature> heads;
    for (const auto& tau : m.ms_params) {
        standards.push_back(induced_standard(tau, bp.n));
        heads.push_back(signature_of(irr_quotient(standards.back())));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && heads[i] == heads[j])
                throw AmbiguousFactorSignatureError(
                    "irreducible signatures collide for " + m.ms_params[i].to_string() + " and " +
                    m.ms_params[j].to_string());

    m.entries.assign(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& factor : composition_factors(standards[i])) {
            bool matched = false;
            for (std::size_t j = 0; j < k; ++j)
                if (factor == heads[j]) {
                    ++m.entries[i][j];
                    matched = true;
                    break;
                }
            if (!matched)
                throw AmbiguousFactorSignatureError(
                    "composition factor matches no head in the block: " + factor.to_string());
        }
    }
    return m;
}

/// Outcome of the cross-side multiplicity comparison.
struct MultEqualReport {
    bool equal = false;
    MultiplicityMatrix whittaker;
    MultiplicityMatrix hecke;
    std::vector<std::size_t> image_positions;  // coset index of each ms class
    std::vector<std::string> mismatches;

    std::string status() const { return equal ? "verified" : "mismatch"; }
};

/**
 * Reindexes the Whittaker matrix through the orbit map and asserts
 * entrywise equality with the Hecke matrix on the image.  Requires the
 * equal-stabilizer hypothesis; failures are report contents, not errors.
 */
inline MultEqualReport verify_mult_equal(const BlockParams& bp, KLTable& kl) {
    if (!(bp.eta == stabilizer(bp.lam)))
        throw HypothesisViolatedError("verify_mult_equal requires eta = stabilizer(lambda)");
    MultEqualReport report;
    report.whittaker = whittaker_mult_matrix(bp, kl);
    report.hecke = hecke_mult_matrix(bp);
    const GradedStructure gs = graded_structure(bp.lam);

    for (const auto& tau : report.hecke.ms_params) {
        const Perm image = phi(tau, gs).longest_rep;
        bool found = false;
        for (std::size_t i = 0; i < report.whittaker.coset_params.size(); ++i)
            if (report.whittaker.coset_params[i].longest_rep == image) {
                report.image_positions.push_back(i);
                found = true;
                break;
            }
        if (!found)
            throw NoMatchingCosetError("orbit map image missing from the coset list");
    }
    report.equal = true;
    if (!report.whittaker.unitriangular())
        report.mismatches.push_back("whittaker matrix is not unitriangular");
    if (!report.hecke.unitriangular())
        report.mismatches.push_back("hecke matrix is not unitriangular");
    const std::size_t k = report.hecke.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const long long lhs =
                report.whittaker.entries[report.image_positions[i]][report.image_positions[j]];
            const long long rhs = report.hecke.entries[i][j];
            if (lhs != rhs)
                report.mismatches.push_back(
                    "entry mismatch at std " + report.hecke.ms_params[i].to_string() + ", irr " +
                    report.hecke.ms_params[j].to_string() + ": whittaker " + std::to_string(lhs) +
                    " vs hecke " + std::to_string(rhs));
        }
    report.equal = report.mismatches.empty();
    return report;
}

/// Per-coset row of the irreducible-image verification.
struct IrrImageRow {
    DoubleCoset coset;
    std::optional<MultisegmentClass> psi_image;
    std::size_t functor_dim = 0;                  // dim F(std)
    std::vector<long long> irr_class_vector;      // [F(irr)] over block irreducibles
    bool matches_expected = false;
};

/// Outcome of the main-theorem verification at l = n.
struct IrrImageReport {
    std::vector<IrrImageRow> rows;
    bool images_match = false;       // F(irr) classes equal the expected heads / zero
    bool surjective = false;         // every block irreducible is hit
    bool grothendieck_consistent = false;  // dims of F(std) = M * dims of F(irr)
    std::vector<std::string> notes;

    bool all_passed() const { return images_match && surjective && grothendieck_consistent; }
};

/**
 * For each double coset O: computes F(std(O)) through the functor, inverts
 * the unitriangular Whittaker matrix in the Grothendieck group to obtain
 * the class of F(irr(O)), and checks it is the head of the standard at
 * psi(O) when psi(O) is nonzero and the zero class otherwise; also checks
 * that every irreducible of the Hecke block is hit.
 */
inline IrrImageReport irr_image_table(const BlockParams& bp, KLTable& kl) {
    if (!(bp.eta == stabilizer(bp.lam)))
        throw HypothesisViolatedError("irr_image_table requires eta = stabilizer(lambda)");
    const long l = static_cast<long>(bp.n);
    const GradedStructure gs = graded_structure(bp.lam);
    const MultiplicityMatrix whit = whittaker_mult_matrix(bp, kl);
    const MultiplicityMatrix hecke = hecke_mult_matrix(bp);
    const std::size_t kc = whit.coset_params.size();
    const std::size_t km = hecke.ms_params.size();

    // Signatures of the block's irreducibles, in the hecke index order.
    std::vector<FactorSignature> heads;
    for (const auto& tau : hecke.ms_params)
        heads.push_back(signature_of(irr_quotient(induced_standard(tau, bp.n))));

    // Decompose each F(std(O)) into the irreducible basis.
    std::vector<std::vector<long long>> f_std(kc, std::vector<long long>(km, 0));
    std::vector<std::size_t> f_dims(kc, 0);
    IrrImageReport report;
    for (std::size_t i = 0; i < kc; ++i) {
        const FunctorValue fv = whittaker_functor_value(whit.coset_params[i], bp.lam, l, bp.eta);
        f_dims[i] = fv.module.dim;
        if (fv.module.dim > 0) {
            for (const auto& factor : composition_factors(fv.module)) {
                bool matched = false;
                for (std::size_t j = 0; j < km; ++j)
                    if (factor == heads[j]) {
                        ++f_std[i][j];
                        matched = true;
                        break;
                    }
                if (!matched)
                    throw AmbiguousFactorSignatureError(
                        "functor value factor matches no block irreducible");
            }
        }
    }

    // Invert the unitriangular Whittaker matrix over the integers.
    std::vector<std::vector<long long>> inv(kc, std::vector<long long>(kc, 0));
    for (std::size_t i = 0; i < kc; ++i) inv[i][i] = 1;
    for (std::size_t i = kc; i-- > 0;)
        for (std::size_t j = i + 1; j < kc; ++j) {
            const long long c = whit.entries[i][j];
            if (c == 0) continue;
            for (std::size_t t = 0; t < kc; ++t) inv[i][t] -= c * inv[j][t];
        }

    report.images_match = true;
    report.surjective = true;
    report.grothendieck_consistent = true;
    std::vector<bool> hit(km, false);
    for (std::size_t i = 0; i < kc; ++i) {
        IrrImageRow row;
        row.coset = whit.coset_params[i];
        row.psi_image = psi(whit.coset_params[i], gs);
        row.functor_dim = f_dims[i];
        // [F(irr(O_i))] = sum_j inv[i][j] [F(std(O_j))]
        row.irr_class_vector.assign(km, 0);
        for (std::size_t j = 0; j < kc; ++j) {
            if (inv[i][j] == 0) continue;
            for (std::size_t t = 0; t < km; ++t)
                row.irr_class_vector[t] += inv[i][j] * f_std[j][t];
        }
        std::vector<long long> expected(km, 0);
        if (row.psi_image) {
            for (std::size_t t = 0; t < km; ++t)
                if (hecke.ms_params[t] == *row.psi_image) {
                    expected[t] = 1;
                    hit[t] = true;
                }
        }
        row.matches_expected = row.irr_class_vector == expected;
        if (!row.matches_expected) {
            report.images_match = false;
            report.notes.push_back("class mismatch at coset " + row.coset.longest_rep.to_string());
        }
        report.rows.push_back(std::move(row));
    }
    for (std::size_t t = 0; t < km; ++t)
        if (!hit[t]) {
            report.surjective = false;
            report.notes.push_back("irreducible not hit: " + hecke.ms_params[t].to_string());
        }

    // dims of F(std) must equal whittaker-matrix times dims of F(irr).
    std::vector<long long> irr_dims(kc, 0);
    for (std::size_t i = 0; i < kc; ++i) {
        long long d = 0;
        if (report.rows[i].psi_image) {
            for (std::size_t t = 0; t < km; ++t)
                if (hecke.ms_params[t] == *report.rows[i].psi_image)
                    d = static_cast<long long>(heads[t].dim);
        }
        irr_dims[i] = d;
    }
    for (std::size_t i = 0; i < kc; ++i) {
        long long predicted = 0;
        for (std::size_t j = 0; j < kc; ++j) predicted += whit.entries[i][j] * irr_dims[j];
        if (predicted != static_cast<long long>(f_dims[i])) {
            report.grothendieck_consistent = false;
            report.notes.push_back("dimension inconsistency at coset " +
                                   whit.coset_params[i].longest_rep.to_string());
        }
    }
    return report;
}

}  // namespace whecke
