#pragma once

/**
 * @file eigen.hpp
 * @brief Joint generalized eigenspace decompositions over Q.
 *
 * Eigenvalues are found by factoring characteristic polynomials over the
 * rationals (integer-root search after denominator clearing).  An
 * irrational spectrum is an error carrying the offending polynomial, never
 * a silent approximation.
 */

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whecke/matrix.hpp"

namespace whecke {

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier scheme.
/// Returned coefficients ascend: c[0] + c[1] x + ... + c[n] x^n, c[n] = 1.
inline std::vector<Rat> char_poly(const Mat& m) {
    const std::size_t n = m.rows();
    assert(m.cols() == n);
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    Mat mk = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        const Rat ck = -tr / Rat(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

inline std::string poly_to_string(const std::vector<Rat>& coeffs) {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(coeffs[i]);
    }
    return s + "]";
}

namespace detail {

inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> divs{1};
    if (n <= 1) return divs;
    // Trial division; in-scope constant terms are products of small primes.
    std::vector<std::pair<Int, unsigned>> factors;
    Int rest = n;
    for (Int p = 2; p * p <= rest && p < 1000000; p == 2 ? p = 3 : p += 2) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    for (const auto& [p, e] : factors) {
        const std::size_t sz = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline Rat eval_poly(const std::vector<Rat>& c, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

/// Divides a monic-led polynomial by (x - r); remainder must vanish.
inline std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r) {
    std::vector<Rat> q(c.size() - 1);
    Rat carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + carry * r;
    }
    assert(carry == 0);
    return q;
}

}  // namespace detail

/// All rational roots with multiplicity, ascending.  Throws
/// IrrationalSpectrumError if the polynomial does not split over Q.
inline std::vector<std::pair<Rat, std::size_t>> rational_roots(std::vector<Rat> poly) {
    const std::vector<Rat> original = poly;
    std::map<Rat, std::size_t> roots;
    // Strip zero roots first.
    while (poly.size() > 1 && poly[0] == 0) {
        ++roots[Rat(0)];
        poly.erase(poly.begin());
    }
    while (poly.size() > 1) {
        // Clear denominators to an integer polynomial.
        Int lcm = 1;
        for (const auto& c : poly) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
        std::vector<Int> ic(poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i)
            ic[i] = rat_num(poly[i] * Rat(lcm));
        const auto ps = detail::positive_divisors(ic.front());
        const auto qs = detail::positive_divisors(ic.back());
        bool found = false;
        Rat root;
        for (const auto& q : qs) {
            for (const auto& p : ps) {
                for (int sign : {1, -1}) {
                    const Rat cand = Rat(sign * p, q);
                    if (detail::eval_poly(poly, cand) == 0) {
                        root = cand;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw IrrationalSpectrumError(
                "characteristic polynomial does not split over Q: " + poly_to_string(original),
                poly_to_string(poly));
        ++roots[root];
        poly = detail::deflate(poly, root);
    }
    return {roots.begin(), roots.end()};
}

/// Generalized eigenspace ker((M - c)^k), with k grown until stable.
inline Subspace generalized_eigenspace(const Mat& m, const Rat& c) {
    const std::size_t n = m.rows();
    Mat shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= c;
    Mat power = shifted;
    Subspace ker = Subspace::from_rows(kernel_basis(power));
    while (true) {
        power = power * shifted;
        Subspace next = Subspace::from_rows(kernel_basis(power));
        if (next.dim() == ker.dim()) return ker;
        ker = std::move(next);
    }
}

/**
 * Simultaneous generalized eigenspace decomposition of a family of pairwise
 * commuting operators.  The ambient space is the direct sum of the returned
 * subspaces; eigenvalue tuples are distinct and sorted lexicographically.
 *
 * Throws NonCommutingError if a commutator is nonzero, and propagates
 * IrrationalSpectrumError from the root search.
 */
inline std::vector<std::pair<std::vector<Rat>, Subspace>> joint_generalized_eigenspaces(
    const std::vector<Mat>& ops) {
    if (ops.empty()) return {};
    const std::size_t n = ops.front().rows();
    for (const auto& op : ops) {
        if (op.rows() != n || op.cols() != n)
            throw Error("joint_generalized_eigenspaces: inconsistent ambient dimensions");
    }
    for (std::size_t a = 0; a < ops.size(); ++a)
        for (std::size_t b = a + 1; b < ops.size(); ++b)
            if (ops[a] * ops[b] != ops[b] * ops[a])
                throw NonCommutingError("operators " + std::to_string(a) + " and " +
                                        std::to_string(b) + " do not commute");

    std::vector<std::pair<std::vector<Rat>, Subspace>> pieces;
    pieces.emplace_back(std::vector<Rat>{}, Subspace::full(n));
    for (const auto& op : ops) {
        std::vector<std::pair<std::vector<Rat>, Subspace>> next;
        for (const auto& [values, space] : pieces) {
            if (space.dim() == 0) continue;
            // Commuting operators preserve each other's generalized
            // eigenspaces, so the restriction is well defined.
            const Mat sub = restrict_to(op, space);
            for (const auto& [root, mult] : rational_roots(char_poly(sub))) {
                (void)mult;
                const Subspace local = generalized_eigenspace(sub, root);
                Mat lifted(local.dim(), n);
                for (std::size_t i = 0; i < local.dim(); ++i) {
                    std::vector<Rat> v(n, Rat(0));
                    const auto coords = local.basis_row(i);
                    for (std::size_t j = 0; j < space.dim(); ++j) {
                        if (coords[j] == 0) continue;
                        const auto b = space.basis_row(j);
                        for (std::size_t k = 0; k < n; ++k) v[k] += coords[j] * b[k];
                    }
                    lifted.set_row(i, v);
                }
                auto tuple = values;
                tuple.push_back(root);
                next.emplace_back(std::move(tuple), Subspace::from_rows(std::move(lifted)));
            }
        }
        pieces = std::move(next);
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t total = 0;
    for (const auto& p : pieces) total += p.second.dim();
    if (total != n)
        throw Error("joint_generalized_eigenspaces: decomposition does not fill the space");
    return pieces;
}

/// Smallest subspace containing seed and stable under every generator,
/// computed by iterated image-and-sum until fixpoint.
inline Subspace invariant_closure(const std::vector<Mat>& gens, Subspace seed) {
    while (true) {
        Subspace next = seed;
        for (const auto& g : gens) next = next.sum(seed.image_under(g));
        if (next.dim() == seed.dim()) return seed;
        seed = std::move(next);
    }
}

}  // namespace whecke
