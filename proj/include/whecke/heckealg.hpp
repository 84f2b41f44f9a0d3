#pragma once

/**
 * @file heckealg.hpp
 * @brief Normal-form arithmetic in the graded affine Hecke algebra of type A
 *        on l strands.
 *
 * Elements are kept as sums of terms t_w * p(eps_1..eps_l) with the group
 * part on the left.  Polynomials are pushed right past group elements with
 * the rule p * t_s = t_s * s(p) + D_s(p), where D_s is the divided
 * difference (p - s(p)) / (eps_s - eps_{s+1}); in degree one this is
 * literally the defining commutation relation, and higher degrees are the
 * Leibniz extension it forces.
 *
 * The pairing convention is <alpha_i, eps_j> = delta_{i,j} - delta_{i+1,j},
 * which makes s_1 eps_1 = eps_2 s_1 + 1 hold on two strands.
 */

#include <map>
#include <string>
#include <vector>

#include "whecke/permutation.hpp"
#include "whecke/rational.hpp"

namespace whecke {

/// Polynomial in the commuting generators eps_1..eps_l over Q.
class EpsPoly {
public:
    using Monomial = std::vector<int>;  // exponents, size l

    EpsPoly() = default;
    explicit EpsPoly(std::size_t l) : l_(l) {}

    static EpsPoly constant(std::size_t l, const Rat& c) {
        EpsPoly p(l);
        if (c != 0) p.terms_[Monomial(l, 0)] = c;
        return p;
    }

    static EpsPoly variable(std::size_t l, std::size_t k) {
        EpsPoly p(l);
        Monomial m(l, 0);
        m[k - 1] = 1;
        p.terms_[m] = 1;
        return p;
    }

    std::size_t strands() const { return l_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    EpsPoly operator+(const EpsPoly& o) const {
        EpsPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    EpsPoly operator*(const EpsPoly& o) const {
        EpsPoly r(l_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(l_);
                for (std::size_t i = 0; i < l_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    EpsPoly operator*(const Rat& c) const {
        EpsPoly r(l_);
        for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
        return r;
    }

    bool operator==(const EpsPoly& o) const { return l_ == o.l_ && terms_ == o.terms_; }

    /// Variable permutation: w sends eps_j to eps_{w(j)}.
    EpsPoly permuted(const Perm& w) const {
        EpsPoly r(l_);
        for (const auto& [m, c] : terms_) {
            Monomial pm(l_);
            for (std::size_t j = 1; j <= l_; ++j) pm[w(j) - 1] = m[j - 1];
            r.add_term(pm, c);
        }
        return r;
    }

    /// Divided difference (p - s_i(p)) / (eps_i - eps_{i+1}).
    EpsPoly divided_difference(std::size_t i) const {
        EpsPoly r(l_);
        for (const auto& [m, c] : terms_) {
            const int a = m[i - 1], b = m[i];
            if (a == b) continue;
            const int lo = std::min(a, b), hi = std::max(a, b);
            const Rat sign = (a > b) ? c : -c;
            for (int k = 0; k < hi - lo; ++k) {
                Monomial t = m;
                t[i - 1] = lo + k;
                t[i] = hi - 1 - k;
                r.add_term(t, sign);
            }
        }
        return r;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        Rat total = 0;
        for (const auto& [m, c] : terms_) {
            Rat v = c;
            for (std::size_t i = 0; i < l_; ++i)
                for (int k = 0; k < m[i]; ++k) v *= point[i];
            total += v;
        }
        return total;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += rat_to_string(c);
            for (std::size_t i = 0; i < l_; ++i)
                if (m[i] > 0) {
                    s += "*e" + std::to_string(i + 1);
                    if (m[i] > 1) s += "^" + std::to_string(m[i]);
                }
        }
        return s;
    }

private:
    std::size_t l_ = 0;
    std::map<Monomial, Rat> terms_;
};

/// Element of the graded affine Hecke algebra in normal form: a finite sum
/// of t_w * p_w(eps), zero polynomials pruned.
class HeckeElt {
public:
    HeckeElt() = default;
    explicit HeckeElt(std::size_t l) : l_(l) {}

    static HeckeElt one(std::size_t l) {
        return from_term(Perm::identity(l), EpsPoly::constant(l, 1));
    }
    static HeckeElt group(const Perm& w) {
        return from_term(w, EpsPoly::constant(w.degree(), 1));
    }
    static HeckeElt polynomial(const EpsPoly& p) {
        return from_term(Perm::identity(p.strands()), p);
    }
    static HeckeElt eps(std::size_t l, std::size_t k) {
        return polynomial(EpsPoly::variable(l, k));
    }

    static HeckeElt from_term(const Perm& w, const EpsPoly& p) {
        HeckeElt e(w.degree());
        if (!p.is_zero()) e.terms_[w] = p;
        return e;
    }

    std::size_t strands() const { return l_; }
    const std::map<Perm, EpsPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Perm& w, const EpsPoly& p) {
        if (p.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, p);
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HeckeElt operator+(const HeckeElt& o) const {
        HeckeElt r = *this;
        for (const auto& [w, p] : o.terms_) r.add_term(w, p);
        return r;
    }

    bool operator==(const HeckeElt& o) const { return l_ == o.l_ && terms_ == o.terms_; }

    /// Right multiplication by t_{s_i}: t_w p t_s = t_{ws} s(p) + t_w D_s(p).
    HeckeElt mul_right_simple(std::size_t i) const {
        HeckeElt r(l_);
        const Perm s = Perm::simple(l_, i);
        for (const auto& [w, p] : terms_) {
            r.add_term(w * s, p.permuted(s));
            r.add_term(w, p.divided_difference(i));
        }
        return r;
    }

    HeckeElt mul_right_poly(const EpsPoly& q) const {
        HeckeElt r(l_);
        for (const auto& [w, p] : terms_) r.add_term(w, p * q);
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, p] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "[" + w.to_string() + "]*(" + p.to_string() + ")";
        }
        return s;
    }

private:
    std::size_t l_ = 0;
    std::map<Perm, EpsPoly> terms_;
};

/// Product in normal form.
inline HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt result(a.strands());
    for (const auto& [v, q] : b.terms()) {
        HeckeElt x = a;
        for (const auto letter : v.reduced_word()) x = x.mul_right_simple(letter);
        result = result + x.mul_right_poly(q);
    }
    return result;
}

}  // namespace whecke
