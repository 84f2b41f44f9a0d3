#pragma once

/**
 * @file heckemod.hpp
 * @brief Finite-dimensional modules of the graded affine Hecke algebra:
 *        induced standards, spectra, submodule lattices, composition
 *        series, irreducible quotients, isomorphism testing.
 *
 * Every module is a tuple of exact generator matrices; all defining
 * relations are verified as matrix identities on construction paths that
 * promise them.  Radicals are computed through the trace form of the image
 * algebra (exact over Q in characteristic zero), which keeps composition
 * series and heads certified even when joint spectra are not
 * multiplicity-free.
 */

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "whecke/eigen.hpp"
#include "whecke/heckealg.hpp"
#include "whecke/multisegment.hpp"

namespace whecke {

/// Joint generalized eps-eigenvalues with multiplicity; sums to dim.
struct WeightSpectrum {
    std::vector<std::pair<std::vector<Rat>, std::size_t>> entries;  // sorted by tuple

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& e : entries) t += e.second;
        return t;
    }

    bool operator==(const WeightSpectrum& o) const { return entries == o.entries; }
    bool operator<(const WeightSpectrum& o) const { return entries < o.entries; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ", ";
            s += "(";
            for (std::size_t j = 0; j < entries[i].first.size(); ++j) {
                if (j) s += ",";
                s += rat_to_string(entries[i].first[j]);
            }
            s += ")x" + std::to_string(entries[i].second);
        }
        return s + "}";
    }
};

/// A finite-dimensional module over the graded affine Hecke algebra on l
/// strands, given by exact generator matrices.
struct HModule {
    std::size_t l = 0;
    std::size_t dim = 0;
    std::vector<Mat> s_mats;            // l-1 simple reflections
    std::vector<Mat> eps_mats;          // l polynomial generators
    std::vector<Perm> basis_labels;     // minimal coset reps when induced
    std::optional<std::size_t> generator_index;  // position of the cyclic generator

    std::vector<Mat> all_generators() const {
        std::vector<Mat> gens = s_mats;
        gens.insert(gens.end(), eps_mats.begin(), eps_mats.end());
        return gens;
    }
};

/// Checks every defining relation as an exact matrix identity; returns a
/// description of the first failure, or empty on success.
inline std::string relation_failure(const HModule& m) {
    const Mat id = Mat::identity(m.dim);
    const auto& s = m.s_mats;
    const auto& e = m.eps_mats;
    for (std::size_t i = 0; i + 1 < m.l; ++i)
        if (s[i] * s[i] != id) return "s_" + std::to_string(i + 1) + "^2 != 1";
    for (std::size_t i = 0; i + 2 < m.l; ++i)
        if (s[i] * s[i + 1] * s[i] != s[i + 1] * s[i] * s[i + 1])
            return "braid relation fails at " + std::to_string(i + 1);
    for (std::size_t i = 0; i + 1 < m.l; ++i)
        for (std::size_t j = i + 2; j + 1 < m.l; ++j)
            if (s[i] * s[j] != s[j] * s[i])
                return "distant reflections " + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + " do not commute";
    for (std::size_t i = 0; i < m.l; ++i)
        for (std::size_t j = i + 1; j < m.l; ++j)
            if (e[i] * e[j] != e[j] * e[i])
                return "eps_" + std::to_string(i + 1) + ", eps_" + std::to_string(j + 1) +
                       " do not commute";
    // s_i eps_j - eps_{s_i(j)} s_i = <alpha_i, eps_j> = d_{ij} - d_{i+1,j}
    for (std::size_t i = 1; i < m.l; ++i)
        for (std::size_t j = 1; j <= m.l; ++j) {
            const std::size_t sj = (j == i) ? i + 1 : (j == i + 1 ? i : j);
            const long pairing = (j == i ? 1 : 0) - (j == i + 1 ? 1 : 0);
            const Mat lhs = s[i - 1] * e[j - 1] - e[sj - 1] * s[i - 1];
            if (lhs != id * Rat(pairing))
                return "cross relation fails at s_" + std::to_string(i) + ", eps_" +
                       std::to_string(j);
        }
    return {};
}

inline void check_relations(const HModule& m) {
    const std::string failure = relation_failure(m);
    if (!failure.empty()) throw RelationCheckFailedError("module relation check: " + failure);
}

/**
 * The standard module attached to a multisegment class: induction of the
 * one-dimensional sign-times-character representation of the parabolic
 * subalgebra cut out by the segment lengths.  Basis: t_w tensor 1 over the
 * minimal-length representatives w of W/W_P, ordered by (length, lex);
 * the canonical generator sits at index 0.
 */
inline HModule induced_standard(const MultisegmentClass& tau, std::size_t l) {
    if (static_cast<std::size_t>(tau.support_size()) != l)
        throw LengthMismatchError("segment lengths sum to " + std::to_string(tau.support_size()) +
                                  ", expected " + std::to_string(l));
    // Parabolic from consecutive blocks of segment lengths.
    std::vector<std::size_t> par_idx;
    std::size_t offset = 0;
    for (const auto len : tau.segment_lengths()) {
        for (long k = 1; k < len; ++k) par_idx.push_back(offset + static_cast<std::size_t>(k));
        offset += static_cast<std::size_t>(len);
    }
    const ParabolicSet par(std::move(par_idx));
    const std::vector<Rat> zeta = zeta_weight(tau);
    const std::vector<Perm> reps = min_coset_reps(par, l);

    std::map<Perm, std::size_t> rep_index;
    for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = i;

    HModule m;
    m.l = l;
    m.dim = reps.size();
    m.basis_labels = reps;
    m.generator_index = 0;

    for (std::size_t i = 1; i < l; ++i) {
        Mat mat(m.dim, m.dim);
        const Perm s = Perm::simple(l, i);
        for (std::size_t col = 0; col < m.dim; ++col) {
            const auto [rep, sign] = min_rep_factor(s * reps[col], par);
            mat(rep_index.at(rep), col) = Rat(sign);
        }
        m.s_mats.push_back(std::move(mat));
    }
    for (std::size_t k = 1; k <= l; ++k) {
        Mat mat(m.dim, m.dim);
        const HeckeElt eps_k = HeckeElt::eps(l, k);
        for (std::size_t col = 0; col < m.dim; ++col) {
            // eps_k t_w = sum_u t_u p_u(eps); acting on the generator, the
            // polynomial tail evaluates at zeta and the W_P part by sign.
            const HeckeElt expansion = mul(eps_k, HeckeElt::group(reps[col]));
            for (const auto& [u, poly] : expansion.terms()) {
                const Rat value = poly.evaluate(zeta);
                if (value == 0) continue;
                const auto [rep, sign] = min_rep_factor(u, par);
                mat(rep_index.at(rep), col) += Rat(sign) * value;
            }
        }
        m.eps_mats.push_back(std::move(mat));
    }
    check_relations(m);
    return m;
}

/// Joint generalized eigenvalue multiset of the commuting eps matrices.
inline WeightSpectrum weight_spectrum(const HModule& m) {
    WeightSpectrum sp;
    for (const auto& [tuple, space] : joint_generalized_eigenspaces(m.eps_mats))
        sp.entries.emplace_back(tuple, space.dim());
    return sp;
}

/// The restriction of the module structure to an invariant subspace.
inline HModule sub_module(const HModule& m, const Subspace& s) {
    HModule out;
    out.l = m.l;
    out.dim = s.dim();
    for (const auto& g : m.s_mats) out.s_mats.push_back(restrict_to(g, s));
    for (const auto& g : m.eps_mats) out.eps_mats.push_back(restrict_to(g, s));
    return out;
}

namespace detail {

/// Residual of v against the rref basis of S; supported off S's pivots.
inline std::vector<Rat> reduce_mod(const Subspace& s, std::vector<Rat> v) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const auto b = s.basis_row(i);
        std::size_t pivot = 0;
        while (pivot < b.size() && b[pivot] == 0) ++pivot;
        const Rat c = v[pivot];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (b[j] != 0) v[j] -= c * b[j];
    }
    return v;
}

inline std::vector<std::size_t> complement_columns(const Subspace& s) {
    std::vector<bool> is_pivot(s.ambient_dim(), false);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const auto b = s.basis_row(i);
        std::size_t pivot = 0;
        while (pivot < b.size() && b[pivot] == 0) ++pivot;
        is_pivot[pivot] = true;
    }
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < s.ambient_dim(); ++c)
        if (!is_pivot[c]) cols.push_back(c);
    return cols;
}

}  // namespace detail

/// The quotient of the module by an invariant subspace, in the basis of
/// standard unit vectors complementary to the subspace's pivots.
inline HModule quotient_module(const HModule& m, const Subspace& s) {
    const auto cols = detail::complement_columns(s);
    HModule out;
    out.l = m.l;
    out.dim = cols.size();
    const auto project = [&](const Mat& g) {
        Mat q(cols.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<Rat> e(m.dim, Rat(0));
            e[cols[j]] = 1;
            const auto img = detail::reduce_mod(s, g.apply(e));
            for (std::size_t i = 0; i < cols.size(); ++i) q(i, j) = img[cols[i]];
        }
        return q;
    };
    for (const auto& g : m.s_mats) out.s_mats.push_back(project(g));
    for (const auto& g : m.eps_mats) out.eps_mats.push_back(project(g));
    if (m.generator_index) {
        std::vector<Rat> e(m.dim, Rat(0));
        e[*m.generator_index] = 1;
        const auto img = detail::reduce_mod(s, e);
        // Keep the label only when the image is a unit vector of the
        // quotient basis; otherwise it is dropped.
        std::size_t nonzero = 0, at = 0;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (img[cols[i]] != 0) {
                ++nonzero;
                at = i;
            }
        if (nonzero == 1 && img[cols[at]] == 1) out.generator_index = at;
    }
    return out;
}

/// Basis of the image algebra of the module (the span of all words in the
/// generators, including the identity), as concrete matrices.
inline std::vector<Mat> module_algebra_basis(const HModule& m) {
    const std::size_t d = m.dim;
    const auto gens = m.all_generators();
    const auto vectorize = [&](const Mat& a) {
        std::vector<Rat> v(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) v[i * d + j] = a(i, j);
        return v;
    };
    std::vector<Mat> basis;
    Subspace span(d * d);
    const auto try_add = [&](const Mat& a) {
        const Subspace grown = span.sum(Subspace::from_vectors({vectorize(a)}, d * d));
        if (grown.dim() == span.dim()) return false;
        span = grown;
        basis.push_back(a);
        return true;
    };
    try_add(Mat::identity(d));
    for (const auto& g : gens) try_add(g);
    for (std::size_t next = 0; next < basis.size(); ++next) {
        const Mat current = basis[next];
        for (const auto& g : gens) try_add(current * g);
    }
    return basis;
}

/// Jacobson radical of the image algebra via the trace form (exact in
/// characteristic zero): x lies in the radical iff tr(x a) = 0 for all a.
inline std::vector<Mat> algebra_radical_basis(const std::vector<Mat>& algebra) {
    if (algebra.empty()) return {};
    const std::size_t d = algebra.front().rows();
    const std::size_t k = algebra.size();
    Mat gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat tr = 0;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) tr += algebra[i](a, b) * algebra[j](b, a);
            gram(i, j) = std::move(tr);
        }
    const Mat ker = kernel_basis(std::move(gram));
    std::vector<Mat> rad;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Mat x(d, d);
        for (std::size_t i = 0; i < k; ++i) {
            if (ker(r, i) == 0) continue;
            x = x + algebra[i] * ker(r, i);
        }
        rad.push_back(std::move(x));
    }
    return rad;
}

/// The radical submodule J(A) M, with A the image algebra.
inline Subspace radical_submodule(const HModule& m) {
    const auto rad = algebra_radical_basis(module_algebra_basis(m));
    Subspace out(m.dim);
    const Subspace full = Subspace::full(m.dim);
    for (const auto& x : rad) out = out.sum(full.image_under(x));
    return out;
}

/// Absolute irreducibility: the image algebra is all of End (Burnside).
inline bool is_irreducible(const HModule& m) {
    if (m.dim == 0) return false;
    return module_algebra_basis(m).size() == m.dim * m.dim;
}

/// The factor signature used to identify irreducibles across computations.
struct FactorSignature {
    std::size_t dim = 0;
    WeightSpectrum spectrum;

    bool operator==(const FactorSignature& o) const {
        return dim == o.dim && spectrum == o.spectrum;
    }
    bool operator<(const FactorSignature& o) const {
        if (dim != o.dim) return dim < o.dim;
        return spectrum < o.spectrum;
    }
    std::string to_string() const {
        return "dim " + std::to_string(dim) + " spectrum " + spectrum.to_string();
    }
};

inline FactorSignature signature_of(const HModule& m) {
    return FactorSignature{m.dim, weight_spectrum(m)};
}

namespace detail {

/// Endomorphism algebra basis: solutions T of T g = g T over all generators.
inline std::vector<Mat> endomorphism_basis(const HModule& m) {
    const std::size_t d = m.dim;
    const auto gens = m.all_generators();
    Mat sys(gens.size() * d * d, d * d);
    std::size_t row = 0;
    for (const auto& g : gens) {
        // (T g - g T)_{ij} = sum_k T_{ik} g_{kj} - g_{ik} T_{kj}
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = 0; k < d; ++k) {
                    sys(row, i * d + k) += g(k, j);
                    sys(row, k * d + j) -= g(i, k);
                }
                ++row;
            }
    }
    const Mat ker = kernel_basis(std::move(sys));
    std::vector<Mat> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Mat t(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t(i, j) = ker(r, i * d + j);
        out.push_back(std::move(t));
    }
    return out;
}

inline Rat determinant(Mat m) {
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline void collect_factors(const HModule& m, std::vector<FactorSignature>& out);

/// Splits a module along an endomorphism's rational eigenvalue and recurses
/// into kernel and cokernel; returns false when no split was found.
inline bool split_by_endomorphism(const HModule& m, std::vector<FactorSignature>& out) {
    const auto endos = endomorphism_basis(m);
    std::vector<Mat> candidates = endos;
    for (std::size_t a = 0; a < endos.size(); ++a)
        for (std::size_t b = 0; b < endos.size(); ++b) candidates.push_back(endos[a] * endos[b]);
    for (const auto& t : candidates) {
        bool scalar = true;
        for (std::size_t i = 0; i < m.dim && scalar; ++i)
            for (std::size_t j = 0; j < m.dim && scalar; ++j)
                if (t(i, j) != (i == j ? t(0, 0) : Rat(0))) scalar = false;
        if (scalar) continue;
        std::vector<std::pair<Rat, std::size_t>> roots;
        try {
            roots = rational_roots(char_poly(t));
        } catch (const IrrationalSpectrumError&) {
            continue;
        }
        for (const auto& [root, mult] : roots) {
            (void)mult;
            Mat shifted = t;
            for (std::size_t i = 0; i < m.dim; ++i) shifted(i, i) -= root;
            const Subspace ker = Subspace::from_rows(kernel_basis(shifted));
            if (ker.dim() == 0 || ker.dim() == m.dim) continue;
            collect_factors(sub_module(m, ker), out);
            collect_factors(quotient_module(m, ker), out);
            return true;
        }
    }
    return false;
}

inline void collect_factors(const HModule& m, std::vector<FactorSignature>& out) {
    if (m.dim == 0) return;
    if (is_irreducible(m)) {
        out.push_back(signature_of(m));
        return;
    }
    const Subspace rad = radical_submodule(m);
    if (rad.dim() > 0 && rad.dim() < m.dim) {
        collect_factors(quotient_module(m, rad), out);
        collect_factors(sub_module(m, rad), out);
        return;
    }
    // Semisimple but not simple: split through the endomorphism algebra.
    if (split_by_endomorphism(m, out)) return;
    throw Error("unable to split a semisimple module over Q (non-split endomorphism algebra)");
}

}  // namespace detail

/**
 * Jordan-Hoelder factor signatures (with multiplicity), computed from the
 * radical series with endomorphism splitting of the semisimple layers.
 * Deterministic order (sorted); dims sum to dim.
 */
inline std::vector<FactorSignature> composition_factors(const HModule& m) {
    std::vector<FactorSignature> out;
    detail::collect_factors(m, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Submodule lattice with an honesty flag: certified means provably
/// complete (multiplicity-free joint spectrum, where every invariant
/// subspace is a sum of joint eigenlines).
struct SubmoduleLattice {
    std::vector<Subspace> subspaces;  // sorted, includes 0 and the whole space
    bool certified = false;
};

inline SubmoduleLattice submodule_lattice(const HModule& m) {
    const auto gens = m.all_generators();
    const auto eigen = joint_generalized_eigenspaces(m.eps_mats);
    bool multiplicity_free = true;
    for (const auto& [tuple, space] : eigen)
        if (space.dim() != 1) multiplicity_free = false;

    std::set<Subspace> found;
    found.insert(Subspace(m.dim));
    found.insert(Subspace::full(m.dim));

    std::vector<std::vector<Rat>> seeds;
    for (const auto& [tuple, space] : eigen) {
        for (std::size_t i = 0; i < space.dim(); ++i) seeds.push_back(space.basis_row(i));
        if (!multiplicity_free && space.dim() > 1) {
            // a bounded set of deterministic mixed seeds; the lattice is
            // reported uncertified on this path
            for (std::size_t i = 0; i + 1 < space.dim(); ++i) {
                auto a = space.basis_row(i);
                const auto b = space.basis_row(i + 1);
                for (long c = 1; c <= 3; ++c) {
                    auto mixed = a;
                    for (std::size_t k = 0; k < mixed.size(); ++k) mixed[k] += Rat(c) * b[k];
                    seeds.push_back(mixed);
                }
            }
        }
    }
    for (const auto& seed : seeds)
        found.insert(invariant_closure(gens, Subspace::from_vectors({seed}, m.dim)));
    // Close under sums.
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Subspace> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size() && !grew; ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                const Subspace s = snapshot[i].sum(snapshot[j]);
                if (found.insert(s).second) {
                    grew = true;
                    break;
                }
            }
    }
    SubmoduleLattice lattice;
    lattice.subspaces.assign(found.begin(), found.end());
    lattice.certified = multiplicity_free;
    return lattice;
}

/**
 * The unique irreducible quotient of a cyclic module: the quotient by the
 * radical submodule.  Requires the module to be cyclic on its canonical
 * generator; the result is verified irreducible.
 */
inline HModule irr_quotient(const HModule& m) {
    if (!m.generator_index) throw NotCyclicError("module carries no canonical generator");
    std::vector<Rat> gen(m.dim, Rat(0));
    gen[*m.generator_index] = 1;
    const Subspace cyclic =
        invariant_closure(m.all_generators(), Subspace::from_vectors({gen}, m.dim));
    if (cyclic.dim() != m.dim)
        throw NotCyclicError("canonical generator generates a proper submodule");
    const Subspace rad = radical_submodule(m);
    if (rad.contains(gen))
        throw Error("radical contains the cyclic generator; head would vanish");
    HModule head = quotient_module(m, rad);
    if (!is_irreducible(head))
        throw Error("head of the standard module failed the irreducibility check");
    // Any nonzero vector of an irreducible module is cyclic.
    if (!head.generator_index) head.generator_index = 0;
    return head;
}

/// Isomorphism verdict with an explicit witness or a refusal certificate.
struct IsoResult {
    bool isomorphic = false;
    std::optional<Mat> witness;  // invertible T with T a = b T on generators
    std::string certificate;     // why not, when isomorphic is false
};

/**
 * Decides isomorphism by solving the full intertwiner system and searching
 * the solution space for an invertible element on the integer grid
 * {0..dim}^h.  Because det is a polynomial of degree <= dim in the h grid
 * coordinates, an empty grid search certifies that no invertible
 * intertwiner exists (combinatorial Nullstellensatz).
 */
inline IsoResult is_isomorphic(const HModule& a, const HModule& b) {
    IsoResult res;
    if (a.l != b.l) {
        res.certificate = "different strand counts";
        return res;
    }
    if (a.dim != b.dim) {
        res.certificate = "dimension mismatch: " + std::to_string(a.dim) + " vs " +
                          std::to_string(b.dim);
        return res;
    }
    if (a.dim == 0) {
        res.isomorphic = true;
        res.witness = Mat(0, 0);
        return res;
    }
    if (!(weight_spectrum(a) == weight_spectrum(b))) {
        res.certificate = "spectrum mismatch";
        return res;
    }
    const std::size_t d = a.dim;
    const auto ga = a.all_generators();
    const auto gb = b.all_generators();
    // T ga = gb T for all generators.
    Mat sys(ga.size() * d * d, d * d);
    std::size_t row = 0;
    for (std::size_t g = 0; g < ga.size(); ++g) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = 0; k < d; ++k) {
                    sys(row, i * d + k) += ga[g](k, j);
                    sys(row, k * d + j) -= gb[g](i, k);
                }
                ++row;
            }
    }
    const Mat ker = kernel_basis(std::move(sys));
    const std::size_t h = ker.rows();
    if (h == 0) {
        res.certificate = "empty intertwiner space";
        return res;
    }
    std::vector<Mat> basis;
    for (std::size_t r = 0; r < h; ++r) {
        Mat t(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t(i, j) = ker(r, i * d + j);
        basis.push_back(std::move(t));
    }
    double grid_size = 1;
    for (std::size_t i = 0; i < h; ++i) grid_size *= static_cast<double>(d + 1);
    if (grid_size > 2e6)
        throw Error("intertwiner grid search too large; hom space dim " + std::to_string(h));
    std::vector<std::size_t> coeffs(h, 0);
    while (true) {
        Mat t(d, d);
        for (std::size_t i = 0; i < h; ++i)
            if (coeffs[i] != 0) t = t + basis[i] * Rat(static_cast<long>(coeffs[i]));
        if (detail::determinant(t) != 0) {
            res.isomorphic = true;
            res.witness = std::move(t);
            return res;
        }
        std::size_t pos = 0;
        while (pos < h && coeffs[pos] == d) coeffs[pos++] = 0;
        if (pos == h) break;
        ++coeffs[pos];
    }
    res.certificate = "no invertible element in the " + std::to_string(h) +
                      "-dimensional intertwiner space (grid certificate)";
    return res;
}

}  // namespace whecke
