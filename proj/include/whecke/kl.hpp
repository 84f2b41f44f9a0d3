#pragma once

/**
 * @file kl.hpp
 * @brief Kazhdan-Lusztig polynomials of (S_m, adjacent transpositions).
 *
 * Two mutually independent procedures are provided:
 *   - the classical recursion on the full group, with memoization;
 *   - inversion of the triangular system defined by the R-polynomials.
 * They agree on all of S_4 (and are cross-checked by the test suite); the
 * recursion is the production path, the inversion the oracle.
 *
 * The memo tables are the only mutable state; a KLTable instance must be
 * used from one thread at a time (or behind a lock).  Everything else in
 * this header is pure.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whecke/weyl.hpp"

namespace whecke {

/// Polynomial in q with integer coefficients, ascending degree, trimmed.
class KLPoly {
public:
    KLPoly() = default;
    explicit KLPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
    static KLPoly zero() { return KLPoly(); }
    static KLPoly one() { return KLPoly({1}); }

    const std::vector<long long>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

    long long eval_at_one() const {
        long long s = 0;
        for (auto x : c_) s += x;
        return s;
    }

    KLPoly operator+(const KLPoly& o) const {
        std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return KLPoly(std::move(r));
    }

    KLPoly operator-(const KLPoly& o) const {
        std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return KLPoly(std::move(r));
    }

    KLPoly operator*(const KLPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return KLPoly(std::move(r));
    }

    /// Multiplication by c q^k.
    KLPoly shifted(long long c, std::size_t k) const {
        if (is_zero() || c == 0) return zero();
        std::vector<long long> r(c_.size() + k, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c * c_[i];
        return KLPoly(std::move(r));
    }

    bool operator==(const KLPoly& o) const { return c_ == o.c_; }
    bool operator!=(const KLPoly& o) const { return c_ != o.c_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0)
                s += std::to_string(c_[i]);
            else {
                if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
                s += "q";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

/// Memoized Kazhdan-Lusztig data for one symmetric group S_m.
class KLTable {
public:
    explicit KLTable(std::size_t m) : m_(m), elements_(all_permutations(m)) {
        for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
        lengths_.reserve(elements_.size());
        for (const auto& w : elements_) lengths_.push_back(w.length());
        // Rank matrices make the O(m!) x O(m!) Bruhat comparisons cheap.
        rank_.resize(elements_.size());
        for (std::size_t k = 0; k < elements_.size(); ++k) {
            auto& r = rank_[k];
            const auto& w = elements_[k];
            r.assign(m + 1, std::vector<std::size_t>(m + 1, 0));
            for (std::size_t i = 1; i <= m; ++i)
                for (std::size_t j = 1; j <= m; ++j) {
                    std::size_t c = 0;
                    for (std::size_t t = 1; t <= j; ++t)
                        if (w(t) >= i) ++c;
                    r[i][j] = c;
                }
        }
    }

    std::size_t degree() const { return m_; }
    const std::vector<Perm>& elements() const { return elements_; }

    std::size_t index_of(const Perm& w) const {
        const auto it = index_.find(w);
        if (it == index_.end()) throw Error("permutation outside the table's group");
        return it->second;
    }

    bool leq(std::size_t xi, std::size_t wi) const {
        if (lengths_[xi] > lengths_[wi]) return false;
        const auto& rx = rank_[xi];
        const auto& rw = rank_[wi];
        for (std::size_t i = 1; i <= m_; ++i)
            for (std::size_t j = 1; j <= m_; ++j)
                if (rx[i][j] > rw[i][j]) return false;
        return true;
    }

    bool leq(const Perm& x, const Perm& w) { return leq(index_of(x), index_of(w)); }

    /// P_{x,w} by the classical recursion; zero when x is not below w.
    KLPoly kl_polynomial(const Perm& x, const Perm& w) {
        return kl(index_of(x), index_of(w));
    }

    /// P_{x,w} by R-polynomial inversion; an independent oracle.
    KLPoly kl_polynomial_via_r(const Perm& x, const Perm& w) {
        return kl_r(index_of(x), index_of(w));
    }

    KLPoly r_polynomial(const Perm& x, const Perm& w) { return rp(index_of(x), index_of(w)); }

private:
    std::size_t left_mul_simple(std::size_t wi, std::size_t s) {
        const Perm u = Perm::simple(m_, s) * elements_[wi];
        return index_.at(u);
    }

    KLPoly kl(std::size_t xi, std::size_t wi) {
        if (xi == wi) return KLPoly::one();
        if (!leq(xi, wi)) return KLPoly::zero();
        const auto key = std::make_pair(xi, wi);
        if (const auto it = kl_memo_.find(key); it != kl_memo_.end()) return it->second;

        std::size_t s = 0;
        for (std::size_t i = 1; i < m_; ++i) {
            if (elements_[wi].has_left_descent(i)) {
                s = i;
                break;
            }
        }
        const std::size_t sxi = left_mul_simple(xi, s);
        KLPoly result;
        if (lengths_[sxi] > lengths_[xi]) {
            // l(sx) > l(x) with l(sw) < l(w) forces P_{x,w} = P_{sx,w}.
            result = kl(sxi, wi);
        } else {
            const std::size_t vi = left_mul_simple(wi, s);
            result = kl(sxi, vi) + kl(xi, vi).shifted(1, 1);
            for (std::size_t zi = 0; zi < elements_.size(); ++zi) {
                if (lengths_[left_mul_simple(zi, s)] >= lengths_[zi]) continue;
                if (!leq(xi, zi) || !leq(zi, vi)) continue;
                const long long diff =
                    static_cast<long long>(lengths_[vi]) - static_cast<long long>(lengths_[zi]);
                if (diff % 2 == 0) continue;
                const long long mu = kl(zi, vi).coefficient(static_cast<std::size_t>((diff - 1) / 2));
                if (mu == 0) continue;
                const std::size_t half = static_cast<std::size_t>(
                    (static_cast<long long>(lengths_[wi]) - static_cast<long long>(lengths_[zi])) / 2);
                result = result - kl(xi, zi).shifted(mu, half);
            }
        }
        kl_memo_.emplace(key, result);
        return result;
    }

    KLPoly rp(std::size_t xi, std::size_t wi) {
        if (xi == wi) return KLPoly::one();
        if (!leq(xi, wi)) return KLPoly::zero();
        const auto key = std::make_pair(xi, wi);
        if (const auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;

        std::size_t s = 0;
        for (std::size_t i = 1; i < m_; ++i) {
            if (elements_[wi].has_left_descent(i)) {
                s = i;
                break;
            }
        }
        const std::size_t sxi = left_mul_simple(xi, s);
        const std::size_t swi = left_mul_simple(wi, s);
        KLPoly result;
        if (lengths_[sxi] < lengths_[xi]) {
            result = rp(sxi, swi);
        } else {
            // (q - 1) R_{x,sw} + q R_{sx,sw}
            const KLPoly a = rp(xi, swi);
            const KLPoly b = rp(sxi, swi);
            result = a.shifted(1, 1) - a + b.shifted(1, 1);
        }
        r_memo_.emplace(key, result);
        return result;
    }

    KLPoly kl_r(std::size_t xi, std::size_t wi) {
        if (xi == wi) return KLPoly::one();
        if (!leq(xi, wi)) return KLPoly::zero();
        const auto key = std::make_pair(xi, wi);
        if (const auto it = klr_memo_.find(key); it != klr_memo_.end()) return it->second;

        // q^l P_{x,w}(1/q) - P_{x,w}(q) = sum_{x < z <= w} R_{x,z} P_{z,w},
        // with l = l(w) - l(x).  The right side determines P_{x,w}: its low
        // half is -P, its high half mirrors P, and deg P <= (l-1)/2.
        const long long l =
            static_cast<long long>(lengths_[wi]) - static_cast<long long>(lengths_[xi]);
        KLPoly q_sum;
        for (std::size_t zi = 0; zi < elements_.size(); ++zi) {
            if (zi == xi) continue;
            if (!leq(xi, zi) || !leq(zi, wi)) continue;
            q_sum = q_sum + rp(xi, zi) * kl_r(zi, wi);
        }
        std::vector<long long> coeffs;
        for (long long i = 0; 2 * i <= l - 1; ++i)
            coeffs.push_back(-q_sum.coefficient(static_cast<std::size_t>(i)));
        KLPoly result(std::move(coeffs));
        // The high half of the identity must mirror P; this certifies the
        // inversion (and catches any bookkeeping error in the R table).
        bool consistent = true;
        for (long long i = 0; 2 * i <= l - 1; ++i)
            if (q_sum.coefficient(static_cast<std::size_t>(l - i)) !=
                result.coefficient(static_cast<std::size_t>(i)))
                consistent = false;
        if (l % 2 == 0 && q_sum.coefficient(static_cast<std::size_t>(l / 2)) != 0)
            consistent = false;
        if (q_sum.degree() > l) consistent = false;
        if (!consistent)
            throw Error("R-polynomial inversion inconsistent at pair (" +
                        elements_[xi].to_string() + ", " + elements_[wi].to_string() + ")");
        klr_memo_.emplace(key, result);
        return result;
    }

    std::size_t m_;
    std::vector<Perm> elements_;
    std::map<Perm, std::size_t> index_;
    std::vector<std::size_t> lengths_;
    std::vector<std::vector<std::vector<std::size_t>>> rank_;
    std::map<std::pair<std::size_t, std::size_t>, KLPoly> kl_memo_;
    std::map<std::pair<std::size_t, std::size_t>, KLPoly> r_memo_;
    std::map<std::pair<std::size_t, std::size_t>, KLPoly> klr_memo_;
};

}  // namespace whecke
