#pragma once

/**
 * @file verma.hpp
 * @brief Exact weight-block computations in Verma modules of sl_n: PBW
 *        bases, the straightened g-action, central character data, and the
 *        tensor blocks M(mu) (x) V^{(x) l} at a fixed weight.
 *
 * Weights of module vectors are kept as gl-style n-tuples with the highest
 * weight normalized to coordinate sum zero; the identity matrix then acts
 * by zero on the Verma factor and by one on each tensor slot, which is
 * exactly the normalization the tensor-space operators in functor.hpp rely
 * on.  Vectors are sparse linear combinations of PBW monomials (times
 * tensor words), so actions never leave an allocated range.
 *
 * The straightening memo is per VermaEngine instance: single writer or
 * external synchronization; distinct engines are independent.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "whecke/eigen.hpp"
#include "whecke/matrix.hpp"
#include "whecke/weight.hpp"

namespace whecke {

/// Root bookkeeping for sl_n: positive roots (a,b) with 1 <= a < b <= n in
/// lexicographic order; the negative root vector for index r is E_{b_r,a_r}.
struct SlAlgebra {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pos_roots;

    explicit SlAlgebra(std::size_t n_) : n(n_) {
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = a + 1; b <= n; ++b) pos_roots.emplace_back(a, b);
    }

    std::size_t root_count() const { return pos_roots.size(); }

    std::size_t root_index(std::size_t a, std::size_t b) const {
        for (std::size_t i = 0; i < pos_roots.size(); ++i)
            if (pos_roots[i] == std::make_pair(a, b)) return i;
        throw Error("not a positive root");
    }

    /// Coordinate of the positive root eps_a - eps_b at position c (1-based).
    long root_coord(std::size_t idx, std::size_t c) const {
        const auto& [a, b] = pos_roots[idx];
        return (c == a ? 1 : 0) - (c == b ? 1 : 0);
    }
};

/// Exponents of the ordered product of negative root vectors, smallest root
/// index leftmost; exponent vector indexed by positive-root index.
using PbwMonomial = std::vector<std::uint8_t>;

/// Sparse vector in a Verma module: PBW monomial -> coefficient.
using UeaVector = std::map<PbwMonomial, Rat>;

inline void add_to(UeaVector& v, const PbwMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto& slot = v[m];
    slot += c;
    if (slot == 0) v.erase(m);
}

/**
 * The straightening engine of one Verma module M(mu): the action of any
 * matrix unit E_cd on PBW monomials, by commutator reduction with
 * memoization.  Diagonal units act through gl-weights with the highest
 * weight normalized to sum zero.
 */
class VermaEngine {
public:
    VermaEngine(const SlAlgebra& alg, Weight mu) : alg_(alg), mu_(std::move(mu)) {}

    const SlAlgebra& algebra() const { return alg_; }
    const Weight& highest_weight() const { return mu_; }

    /// gl-weight coordinate c (1-based) of monomial * v_mu.
    Rat weight_coord(const PbwMonomial& m, std::size_t c) const {
        Rat w = mu_[c - 1];
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) w -= Rat(static_cast<long>(m[i]) * alg_.root_coord(i, c));
        return w;
    }

    /// E_cd acting on monomial * v_mu, exact.
    const UeaVector& act_unit(std::size_t c, std::size_t d, const PbwMonomial& m) {
        const auto key = std::make_tuple(c, d, m);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        UeaVector result = compute(c, d, m);
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    UeaVector act(std::size_t c, std::size_t d, const UeaVector& v) {
        UeaVector out;
        for (const auto& [m, coeff] : v)
            for (const auto& [m2, c2] : act_unit(c, d, m)) add_to(out, m2, coeff * c2);
        return out;
    }

private:
    static std::size_t first_index(const PbwMonomial& m) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) return i;
        return m.size();
    }

    UeaVector compute(std::size_t c, std::size_t d, const PbwMonomial& m) {
        UeaVector out;
        if (c == d) {
            add_to(out, m, weight_coord(m, c));
            return out;
        }
        if (c > d) {
            const std::size_t idx = alg_.root_index(d, c);
            // The vacuum accepts any factor; otherwise the new root must
            // not pass the leading one.
            if (first_index(m) == m.size() || idx <= first_index(m)) {
                PbwMonomial grown = m.empty() ? PbwMonomial(alg_.root_count(), 0) : m;
                ++grown[idx];
                add_to(out, grown, 1);
                return out;
            }
        }
        if (first_index(m) == m.size()) return out;  // raising kills v_mu

        // Split m = f_beta * m' at the leading factor and commute through:
        // E_cd f_beta = f_beta E_cd + [E_cd, E_ba],  beta = (a,b).
        const std::size_t lead = first_index(m);
        const auto [a, b] = alg_.pos_roots[lead];
        PbwMonomial rest = m;
        --rest[lead];
        if (first_index(rest) == rest.size()) rest = PbwMonomial{};

        // f_beta * (E_cd * rest)
        for (const auto& [m2, c2] : UeaVector(act_unit(c, d, rest)))
            for (const auto& [m3, c3] : act_unit(b, a, m2)) add_to(out, m3, c2 * c3);
        // [E_cd, E_ba] = d_{db} E_ca - d_{ac} E_bd
        if (d == b)
            for (const auto& [m2, c2] : act_unit(c, a, rest)) add_to(out, m2, c2);
        if (a == c)
            for (const auto& [m2, c2] : act_unit(b, d, rest)) add_to(out, m2, -c2);
        return out;
    }

    SlAlgebra alg_;
    Weight mu_;
    std::map<std::tuple<std::size_t, std::size_t, PbwMonomial>, UeaVector> memo_;
};

/// All PBW monomials of weight drop mu - gamma, deterministic order.
struct VermaBlock {
    Weight mu;
    Weight gamma;
    std::vector<PbwMonomial> basis;
};

namespace detail {

inline void enumerate_monomials(const SlAlgebra& alg, std::size_t root_idx,
                                std::vector<long>& remaining, PbwMonomial& current,
                                std::vector<PbwMonomial>& out) {
    if (root_idx == alg.root_count()) {
        for (const auto r : remaining)
            if (r != 0) return;
        bool zero = true;
        for (const auto e : current)
            if (e) zero = false;
        out.push_back(zero ? PbwMonomial{} : current);
        return;
    }
    // Later roots only ever lower this coordinate further, so the remaining
    // amount at the root's head caps the exponent.
    const auto& [a, b] = alg.pos_roots[root_idx];
    const long cap = std::max<long>(0, remaining[a - 1]);
    for (long e = 0; e <= cap; ++e) {
        current[root_idx] = static_cast<std::uint8_t>(e);
        remaining[a - 1] -= e;
        remaining[b - 1] += e;
        enumerate_monomials(alg, root_idx + 1, remaining, current, out);
        remaining[a - 1] += e;
        remaining[b - 1] -= e;
    }
    current[root_idx] = 0;
}

}  // namespace detail

/// PBW basis of the gamma weight space of M(mu); empty when mu - gamma is
/// not a nonnegative integral combination of positive roots.
inline VermaBlock verma_basis(const Weight& mu, const Weight& gamma) {
    const SlAlgebra alg(mu.n());
    VermaBlock block{mu, gamma, {}};
    const Weight drop = mu - gamma;
    std::vector<long> remaining(mu.n());
    for (std::size_t i = 0; i < mu.n(); ++i) {
        if (!is_integer(drop[i])) return block;
        remaining[i] = static_cast<long>(rat_num(drop[i]));
    }
    PbwMonomial current(alg.root_count(), 0);
    detail::enumerate_monomials(alg, 0, remaining, current, block.basis);
    std::sort(block.basis.begin(), block.basis.end());
    return block;
}

/// Scalars by which the center acts on M(mu): the quadratic Casimir of the
/// trace form and the Gelfand invariants of degrees 2..n, all obtained by
/// acting on the highest weight vector.
struct CentralCharData {
    Rat casimir_value;
    std::vector<Rat> higher_values;  // degrees 2..n

    bool operator==(const CentralCharData& o) const {
        return casimir_value == o.casimir_value && higher_values == o.higher_values;
    }
};

namespace detail {

/// Dual basis of the traceless Cartan under the trace form: pairs
/// (h_i, h^i) expressed as diagonal coefficient vectors.
inline std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> cartan_dual_pairs(
    std::size_t n) {
    // h_i = E_ii - E_{i+1,i+1}; Gram(i,j) = tr(h_i h_j).
    const std::size_t r = n - 1;
    Mat gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j)
                gram(i, j) = 2;
            else if (i + 1 == j || j + 1 == i)
                gram(i, j) = -1;
        }
    // Invert by solving gram * X = I.
    Mat aug(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = gram(i, j);
        aug(i, r + i) = 1;
    }
    aug.rref();
    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> pairs;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rat> h(n, Rat(0)), hdual(n, Rat(0));
        h[i] = 1;
        h[i + 1] = -1;
        for (std::size_t j = 0; j < r; ++j) {
            // h^i = sum_j (G^{-1})_{ij} h_j; inverse rows live in aug.
            const Rat c = aug(j, r + i);
            hdual[j] += c;
            hdual[j + 1] -= c;
        }
        pairs.emplace_back(std::move(h), std::move(hdual));
    }
    return pairs;
}

/// Applies a diagonal gl element with coefficient vector diag to a Verma
/// vector (sum_c diag_c E_cc).
inline UeaVector apply_diagonal(VermaEngine& eng, const std::vector<Rat>& diag,
                                const UeaVector& v) {
    UeaVector out;
    for (const auto& [m, coeff] : v) {
        Rat scalar = 0;
        for (std::size_t c = 1; c <= diag.size(); ++c)
            if (diag[c - 1] != 0) scalar += diag[c - 1] * eng.weight_coord(m, c);
        add_to(out, m, coeff * scalar);
    }
    return out;
}

inline Rat scalar_on_highest_weight(const UeaVector& v) {
    Rat value = 0;
    for (const auto& [m, c] : v) {
        bool empty = true;
        for (const auto e : m)
            if (e) empty = false;
        if (empty)
            value = c;
        else if (c != 0)
            throw Error("central element did not act by a scalar on the highest weight line");
    }
    return value;
}

}  // namespace detail

/// Quadratic Casimir value on M(mu) by direct application to v_mu.
inline Rat casimir_scalar(const Weight& mu) {
    const SlAlgebra alg(mu.n());
    VermaEngine eng(alg, mu);
    const UeaVector vac{{PbwMonomial{}, Rat(1)}};
    UeaVector total;
    for (std::size_t a = 1; a <= mu.n(); ++a)
        for (std::size_t b = 1; b <= mu.n(); ++b) {
            if (a == b) continue;
            for (const auto& [m, c] : eng.act(a, b, eng.act(b, a, vac))) add_to(total, m, c);
        }
    for (const auto& [h, hdual] : detail::cartan_dual_pairs(mu.n())) {
        for (const auto& [m, c] :
             detail::apply_diagonal(eng, h, detail::apply_diagonal(eng, hdual, vac)))
            add_to(total, m, c);
    }
    return detail::scalar_on_highest_weight(total);
}

/// Gelfand invariant of degree k on M(mu): the full cyclic sum
/// sum E_{i1 i2} E_{i2 i3} ... E_{ik i1} applied to v_mu.
inline Rat gelfand_scalar(const Weight& mu, std::size_t k) {
    const SlAlgebra alg(mu.n());
    VermaEngine eng(alg, mu);
    const std::size_t n = mu.n();
    const UeaVector vac{{PbwMonomial{}, Rat(1)}};
    UeaVector total;
    std::vector<std::size_t> idx(k, 1);
    while (true) {
        UeaVector v = vac;
        for (std::size_t t = k; t-- > 0;) {
            const std::size_t row = idx[t];
            const std::size_t col = idx[(t + 1) % k];
            v = eng.act(row, col, v);
            if (v.empty()) break;
        }
        for (const auto& [m, c] : v) add_to(total, m, c);
        std::size_t pos = 0;
        while (pos < k && idx[pos] == n) idx[pos++] = 1;
        if (pos == k) break;
        ++idx[pos];
    }
    return detail::scalar_on_highest_weight(total);
}

inline CentralCharData casimir_data(const Weight& mu) {
    CentralCharData data;
    data.casimir_value = casimir_scalar(mu);
    for (std::size_t k = 2; k <= mu.n(); ++k) data.higher_values.push_back(gelfand_scalar(mu, k));
    return data;
}

// ---------------------------------------------------------------------------
// Tensor blocks
// ---------------------------------------------------------------------------

/// A basis vector of M(mu) (x) V^{(x) l}: PBW monomial times a tensor word
/// in letters 0..n-1.
using Word = std::vector<std::uint8_t>;
using TensorKey = std::pair<PbwMonomial, Word>;
using TensorVec = std::map<TensorKey, Rat>;

inline void add_to(TensorVec& v, const TensorKey& k, const Rat& c) {
    if (c == 0) return;
    auto& slot = v[k];
    slot += c;
    if (slot == 0) v.erase(k);
}

/**
 * The weight-lambda slice of M(mu) (x) V^{(x) l}: every basis vector has
 * total gl-weight lambda_gl = lambda_0 + (l/n)(1..1).  The g-action and the
 * tensor-space operators act on free-form sparse vectors, so no block range
 * management is needed; only final results are expressed in the basis.
 */
class TensorBlock {
public:
    TensorBlock(const Weight& mu, const Weight& lam, long l)
        : alg_(mu.n()), engine_(alg_, mu), mu_(mu), lam_(lam), l_(l) {
        const std::size_t n = mu.n();
        slice_gl_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            slice_gl_[i] = lam[i] + Rat(l, static_cast<long>(n));
        // Enumerate words in lex order; for each, the PBW monomials of the
        // complementary Verma weight.
        Word word(static_cast<std::size_t>(l), 0);
        while (true) {
            std::vector<Rat> target(n);
            for (std::size_t i = 0; i < n; ++i) target[i] = mu[i];
            for (const auto letter : word) target[letter] += 1;
            // need monomial weight = slice_gl - word part relative to mu
            std::vector<Rat> drop(n);
            bool integral = true;
            for (std::size_t i = 0; i < n; ++i) {
                drop[i] = target[i] - slice_gl_[i];
                if (!is_integer(drop[i])) integral = false;
            }
            if (integral) {
                std::vector<long> remaining(n);
                for (std::size_t i = 0; i < n; ++i) remaining[i] = static_cast<long>(rat_num(drop[i]));
                std::vector<PbwMonomial> monos;
                PbwMonomial current(alg_.root_count(), 0);
                detail::enumerate_monomials(alg_, 0, remaining, current, monos);
                std::sort(monos.begin(), monos.end());
                for (auto& m : monos) basis_.emplace_back(std::move(m), word);
            }
            // next word
            std::size_t pos = word.size();
            while (pos > 0 && word[pos - 1] == n - 1) word[--pos] = 0;
            if (pos == 0) break;
            ++word[pos - 1];
        }
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }

    const Weight& mu() const { return mu_; }
    const Weight& lambda() const { return lam_; }
    long strands() const { return l_; }
    std::size_t n() const { return alg_.n; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<TensorKey>& basis() const { return basis_; }
    const std::vector<Rat>& slice_weight() const { return slice_gl_; }
    VermaEngine& engine() const { return engine_; }

    /// E_cd acting on the Verma factor only.
    TensorVec act_verma(std::size_t c, std::size_t d, const TensorVec& v) const {
        TensorVec out;
        for (const auto& [key, coeff] : v)
            for (const auto& [m2, c2] : engine_.act_unit(c, d, key.first))
                add_to(out, {m2, key.second}, coeff * c2);
        return out;
    }

    /// E_cd acting on tensor slot j (1-based).
    TensorVec act_slot(std::size_t c, std::size_t d, std::size_t j, const TensorVec& v) const {
        TensorVec out;
        for (const auto& [key, coeff] : v) {
            const auto letter = key.second[j - 1];
            if (letter + 1 != d) continue;  // E_cd e_d = e_c
            TensorKey moved = key;
            moved.second[j - 1] = static_cast<std::uint8_t>(c - 1);
            add_to(out, moved, coeff);
        }
        return out;
    }

    /// Total (coproduct) action of E_cd on the tensor product.
    TensorVec act_total(std::size_t c, std::size_t d, const TensorVec& v) const {
        TensorVec out = act_verma(c, d, v);
        for (std::size_t j = 1; j <= static_cast<std::size_t>(l_); ++j)
            for (const auto& [key, coeff] : act_slot(c, d, j, v)) add_to(out, key, coeff);
        return out;
    }

    TensorVec basis_vector(std::size_t i) const {
        TensorVec v;
        v[basis_[i]] = 1;
        return v;
    }

    /// Expresses a slice-preserving operator as a matrix in the block basis.
    template <typename Op>
    Mat to_matrix(Op&& op) const {
        Mat out(dim(), dim());
        for (std::size_t col = 0; col < dim(); ++col) {
            const TensorVec image = op(basis_vector(col));
            for (const auto& [key, coeff] : image) {
                const auto it = index_.find(key);
                if (it == index_.end())
                    throw Error("operator left the weight slice; not block-diagonal");
                out(it->second, col) = coeff;
            }
        }
        return out;
    }

private:
    SlAlgebra alg_;
    mutable VermaEngine engine_;
    Weight mu_;
    Weight lam_;
    long l_;
    std::vector<Rat> slice_gl_;
    std::vector<TensorKey> basis_;
    std::map<TensorKey, std::size_t> index_;
};

/// Matrix of the quadratic (sl, trace form) Casimir in the total action.
inline Mat casimir_matrix(const TensorBlock& tb) {
    const std::size_t n = tb.n();
    Mat total(tb.dim(), tb.dim());
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
            if (a == b) continue;
            total = total + tb.to_matrix([&](const TensorVec& v) {
                return tb.act_total(a, b, tb.act_total(b, a, v));
            });
        }
    // The Cartan dual-pair part is scalar on a weight slice.
    Rat cartan = 0;
    for (const auto& [h, hdual] : detail::cartan_dual_pairs(n)) {
        Rat vh = 0, vd = 0;
        for (std::size_t i = 0; i < n; ++i) {
            vh += h[i] * tb.slice_weight()[i];
            vd += hdual[i] * tb.slice_weight()[i];
        }
        cartan += vh * vd;
    }
    return total + Mat::identity(tb.dim()) * cartan;
}

/// Matrix of the degree-k Gelfand invariant in the total action.
inline Mat gelfand_matrix(const TensorBlock& tb, std::size_t k) {
    const std::size_t n = tb.n();
    return tb.to_matrix([&](const TensorVec& v0) {
        TensorVec total;
        std::vector<std::size_t> idx(k, 1);
        while (true) {
            TensorVec v = v0;
            for (std::size_t t = k; t-- > 0;) {
                v = tb.act_total(idx[t], idx[(t + 1) % k], v);
                if (v.empty()) break;
            }
            for (const auto& [key, c] : v) add_to(total, key, c);
            std::size_t pos = 0;
            while (pos < k && idx[pos] == n) idx[pos++] = 1;
            if (pos == k) break;
            ++idx[pos];
        }
        return total;
    });
}

/**
 * Projection of the tensor block onto the generalized central character of
 * lambda: the generalized Casimir eigenspace, refined by higher Gelfand
 * invariants only when a collision among the Verma-filtration weights is
 * detected.  Throws UnresolvedCollision if degrees up to n cannot separate.
 */
inline Subspace block_projection(const TensorBlock& tb) {
    if (tb.dim() == 0) return Subspace(0);
    const std::size_t n = tb.n();
    // Filtration weights mu + nu over the word weights present in the block.
    std::set<Weight> kappas;
    for (const auto& [mono, word] : tb.basis()) {
        std::vector<Rat> coords(tb.mu().coords());
        for (const auto letter : word) coords[letter] += 1;
        kappas.insert(Weight(std::move(coords)));
    }
    const Weight rho = Weight::rho(n);
    const auto orbit_values = [&](const Weight& w) {
        std::vector<Rat> v((w + rho).coords());
        std::sort(v.begin(), v.end());
        return v;
    };
    const auto lam_orbit = orbit_values(tb.lambda());

    std::vector<std::size_t> extra_degrees;  // gelfand degrees added on demand
    const Rat lam_casimir = casimir_scalar(tb.lambda());
    std::map<Weight, Rat> kappa_casimir;
    for (const auto& k : kappas) kappa_casimir[k] = casimir_scalar(k);
    std::map<Weight, std::vector<Rat>> kappa_extra;
    std::vector<Rat> lam_extra;
    while (true) {
        bool collision = false;
        for (const auto& k : kappas) {
            if (orbit_values(k) == lam_orbit) continue;
            if (kappa_casimir[k] == lam_casimir && kappa_extra[k] == lam_extra) collision = true;
        }
        if (!collision) break;
        const std::size_t next = extra_degrees.empty() ? 3 : extra_degrees.back() + 1;
        if (next > n)
            throw UnresolvedCollisionError(
                "Gelfand invariants up to degree n do not separate the central characters");
        extra_degrees.push_back(next);
        lam_extra.push_back(gelfand_scalar(tb.lambda(), next));
        for (const auto& k : kappas) kappa_extra[k].push_back(gelfand_scalar(k, next));
    }

    Subspace projection = generalized_eigenspace(casimir_matrix(tb), lam_casimir);
    for (std::size_t t = 0; t < extra_degrees.size(); ++t) {
        const Subspace refined =
            generalized_eigenspace(gelfand_matrix(tb, extra_degrees[t]), lam_extra[t]);
        projection = projection.intersect(refined);
    }
    return projection;
}

}  // namespace whecke
