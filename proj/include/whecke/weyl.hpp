#pragma once

/**
 * @file weyl.hpp
 * @brief Parabolic subgroups of S_m and their double cosets.
 *
 * Double cosets are enumerated by brute-force orbit closure; the groups in
 * scope have order at most 120, so simplicity wins over asymptotics.
 */

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "whecke/permutation.hpp"

namespace whecke {

/// A subset of the simple-reflection indices {1..m-1}.
class ParabolicSet {
public:
    ParabolicSet() = default;
    explicit ParabolicSet(std::vector<std::size_t> simple_indices)
        : indices_(std::move(simple_indices)) {
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    }

    const std::vector<std::size_t>& simple_indices() const { return indices_; }
    bool empty() const { return indices_.empty(); }
    bool contains(std::size_t i) const {
        return std::binary_search(indices_.begin(), indices_.end(), i);
    }
    bool operator==(const ParabolicSet& o) const { return indices_ == o.indices_; }
    bool operator!=(const ParabolicSet& o) const { return indices_ != o.indices_; }

    /// Maximal runs of consecutive positions glued by the simple indices;
    /// half-open 1-based intervals [a, b) covering 1..m.
    std::vector<std::pair<std::size_t, std::size_t>> blocks(std::size_t m) const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        std::size_t start = 1;
        for (std::size_t i = 1; i <= m; ++i) {
            const bool glue = i < m && contains(i);
            if (!glue) {
                out.emplace_back(start, i + 1);
                start = i + 1;
            }
        }
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < indices_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(indices_[k]);
        }
        return s;
    }

private:
    std::vector<std::size_t> indices_;
};

/// All elements of the Young subgroup W_P, by closure under generators.
inline std::vector<Perm> parabolic_elements(const ParabolicSet& p, std::size_t m) {
    std::set<Perm> seen{Perm::identity(m)};
    std::vector<Perm> queue{Perm::identity(m)};
    while (!queue.empty()) {
        const Perm w = queue.back();
        queue.pop_back();
        for (auto i : p.simple_indices()) {
            Perm u = Perm::simple(m, i) * w;
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    return {seen.begin(), seen.end()};
}

/// A W_left w W_right class together with its longest representative.
struct DoubleCoset {
    ParabolicSet left;
    ParabolicSet right;
    Perm longest_rep;
    std::size_t size = 0;

    bool operator==(const DoubleCoset& o) const {
        return left == o.left && right == o.right && longest_rep == o.longest_rep;
    }
};

/// All elements of W_left w W_right.
inline std::set<Perm> double_coset_elements(const Perm& w, const ParabolicSet& left,
                                            const ParabolicSet& right) {
    const std::size_t m = w.degree();
    std::set<Perm> seen{w};
    std::vector<Perm> queue{w};
    while (!queue.empty()) {
        const Perm u = queue.back();
        queue.pop_back();
        for (auto i : left.simple_indices()) {
            Perm v = Perm::simple(m, i) * u;
            if (seen.insert(v).second) queue.push_back(v);
        }
        for (auto i : right.simple_indices()) {
            Perm v = u * Perm::simple(m, i);
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    return seen;
}

/// The unique maximal-length element of W_left w W_right.
inline Perm longest_in_coset(const Perm& w, const ParabolicSet& left, const ParabolicSet& right) {
    const auto elems = double_coset_elements(w, left, right);
    const Perm* best = nullptr;
    std::size_t best_len = 0;
    std::size_t ties = 0;
    for (const auto& u : elems) {
        const std::size_t len = u.length();
        if (!best || len > best_len) {
            best = &u;
            best_len = len;
            ties = 1;
        } else if (len == best_len) {
            ++ties;
        }
    }
    if (ties != 1) throw Error("double coset has no unique longest element");
    return *best;
}

/// Partition of S_m into W_left \ S_m / W_right double cosets, ordered by
/// the longest representative's one-line notation (lex).
inline std::vector<DoubleCoset> double_cosets(const ParabolicSet& left, const ParabolicSet& right,
                                              std::size_t m) {
    std::vector<DoubleCoset> out;
    std::set<Perm> assigned;
    for (const auto& w : all_permutations(m)) {
        if (assigned.count(w)) continue;
        const auto elems = double_coset_elements(w, left, right);
        assigned.insert(elems.begin(), elems.end());
        DoubleCoset dc;
        dc.left = left;
        dc.right = right;
        dc.longest_rep = longest_in_coset(w, left, right);
        dc.size = elems.size();
        out.push_back(std::move(dc));
    }
    std::sort(out.begin(), out.end(), [](const DoubleCoset& a, const DoubleCoset& b) {
        return a.longest_rep < b.longest_rep;
    });
    return out;
}

/// Minimal-length representatives of the left cosets W / W_P, i.e. the w
/// with no right descent inside P; sorted by (length, lex).
inline std::vector<Perm> min_coset_reps(const ParabolicSet& p, std::size_t m) {
    std::vector<Perm> out;
    for (const auto& w : all_permutations(m)) {
        bool minimal = true;
        for (auto i : p.simple_indices()) {
            if (w.has_right_descent(i)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const Perm& a, const Perm& b) {
        const auto la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

/// Factors u = u' x with u' the minimal representative of u W_P and
/// x in W_P; returns (u', sign(x)).
inline std::pair<Perm, int> min_rep_factor(const Perm& u, const ParabolicSet& p) {
    const std::size_t m = u.degree();
    auto images = u.one_line();
    int sign = 1;
    for (const auto& [a, b] : p.blocks(m)) {
        // Bubble sort within the block, counting transpositions.
        for (std::size_t i = a; i + 1 < b; ++i) {
            for (std::size_t j = a; j + 1 < b - (i - a); ++j) {
                if (images[j - 1] > images[j]) {
                    std::swap(images[j - 1], images[j]);
                    sign = -sign;
                }
            }
        }
    }
    return {Perm::from_one_line(images), sign};
}

}  // namespace whecke
