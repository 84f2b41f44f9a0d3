#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of {1..m} in one-line notation, Bruhat order.
 */

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "whecke/errors.hpp"

namespace whecke {

/// An element of S_m, stored 0-based; the public face is 1-based one-line
/// notation matching the CLI literal "3,1,4,2".
class Perm {
public:
    Perm() = default;

    static Perm identity(std::size_t m) {
        Perm w;
        w.img_.resize(m);
        std::iota(w.img_.begin(), w.img_.end(), 0);
        return w;
    }

    /// Simple transposition s_i swapping i and i+1 (1-based i, 1 <= i < m).
    static Perm simple(std::size_t m, std::size_t i) {
        assert(i >= 1 && i < m);
        Perm w = identity(m);
        std::swap(w.img_[i - 1], w.img_[i]);
        return w;
    }

    static Perm longest(std::size_t m) {
        Perm w;
        w.img_.resize(m);
        for (std::size_t i = 0; i < m; ++i) w.img_[i] = m - 1 - i;
        return w;
    }

    /// From 1-based one-line notation; validates bijectivity.
    static Perm from_one_line(const std::vector<std::size_t>& images) {
        Perm w;
        w.img_.reserve(images.size());
        std::vector<bool> seen(images.size(), false);
        for (auto v : images) {
            if (v < 1 || v > images.size() || seen[v - 1])
                throw ParseError("not a permutation in one-line notation");
            seen[v - 1] = true;
            w.img_.push_back(v - 1);
        }
        return w;
    }

    std::size_t degree() const { return img_.size(); }

    /// 1-based image of a 1-based point.
    std::size_t operator()(std::size_t i) const { return img_[i - 1] + 1; }

    std::vector<std::size_t> one_line() const {
        std::vector<std::size_t> out(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
        return out;
    }

    /// Composition (w * v)(i) = w(v(i)).
    Perm operator*(const Perm& v) const {
        assert(degree() == v.degree());
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[v.img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    /// Number of inversions.
    std::size_t length() const {
        std::size_t len = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            for (std::size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++len;
        return len;
    }

    /// True iff l(s_i w) < l(w), i.e. i+1 comes before i in w^{-1}.
    bool has_left_descent(std::size_t i) const {
        assert(i >= 1 && i < degree());
        const Perm winv = inverse();
        return winv.img_[i - 1] > winv.img_[i];
    }

    /// True iff l(w s_i) < l(w).
    bool has_right_descent(std::size_t i) const {
        assert(i >= 1 && i < degree());
        return img_[i - 1] > img_[i];
    }

    /// A reduced word s_{i1}...s_{ik} = w, letters 1-based.
    std::vector<std::size_t> reduced_word() const {
        std::vector<std::size_t> word;
        Perm w = *this;
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (std::size_t i = 1; i < w.degree(); ++i) {
                if (w.has_right_descent(i)) {
                    word.push_back(i);
                    w = w * simple(w.degree(), i);
                    progressed = true;
                    break;
                }
            }
        }
        // Peeling right descents of w yields w = s_{j1}...s_{jk} read back
        // to front; reverse to list letters left to right.
        std::reverse(word.begin(), word.end());
        return word;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(img_[i] + 1);
        }
        return s;
    }

private:
    std::vector<std::uint8_t> img_;
};

/// Number of inversions; exposed as a free function to match usage sites.
inline std::size_t length(const Perm& w) { return w.length(); }

inline std::vector<Perm> all_permutations(std::size_t m) {
    std::vector<std::size_t> images(m);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

/**
 * Bruhat order by the rank-matrix criterion: x <= w iff for all i, j
 *   #{k <= j : x(k) >= i}  <=  #{k <= j : w(k) >= i}.
 */
inline bool bruhat_leq(const Perm& x, const Perm& w) {
    assert(x.degree() == w.degree());
    const std::size_t m = x.degree();
    for (std::size_t j = 1; j <= m; ++j) {
        for (std::size_t i = 1; i <= m; ++i) {
            std::size_t cx = 0, cw = 0;
            for (std::size_t k = 1; k <= j; ++k) {
                if (x(k) >= i) ++cx;
                if (w(k) >= i) ++cw;
            }
            if (cx > cw) return false;
        }
    }
    return true;
}

}  // namespace whecke
