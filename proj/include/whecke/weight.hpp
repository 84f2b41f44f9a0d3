#pragma once

/**
 * @file weight.hpp
 * @brief Weights of sl_n modulo the all-ones line, dot action, dominance,
 *        tensor-power weight multiplicities.
 *
 * A weight is stored by its unique representative with coordinate sum zero.
 * "Dominant" always means lambda+rho weakly decreasing; antidominant
 * conventions are not used anywhere in the library.
 */

#include <optional>
#include <string>
#include <vector>

#include "whecke/permutation.hpp"
#include "whecke/rational.hpp"
#include "whecke/weyl.hpp"

namespace whecke {

class Weight {
public:
    Weight() = default;

    /// Canonicalizes to the sum-zero representative of the class mod (1..1).
    explicit Weight(std::vector<Rat> coords) : coords_(std::move(coords)) {
        Rat total = 0;
        for (const auto& c : coords_) total += c;
        if (total != 0) {
            const Rat shift = total / Rat(static_cast<long>(coords_.size()));
            for (auto& c : coords_) c -= shift;
        }
    }

    static Weight zero(std::size_t n) { return Weight(std::vector<Rat>(n, Rat(0))); }

    /// rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2), already sum-zero.
    static Weight rho(std::size_t n) {
        std::vector<Rat> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = Rat(static_cast<long>(n) - 1 - 2 * static_cast<long>(i), 2);
        return Weight(std::move(c));
    }

    std::size_t n() const { return coords_.size(); }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const Weight& o) const { return coords_ == o.coords_; }
    bool operator!=(const Weight& o) const { return coords_ != o.coords_; }
    bool operator<(const Weight& o) const { return coords_ < o.coords_; }

    Weight operator+(const Weight& o) const {
        std::vector<Rat> c(coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return Weight(std::move(c));
    }

    Weight operator-(const Weight& o) const {
        std::vector<Rat> c(coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
        return Weight(std::move(c));
    }

    /// Coordinate permutation (w v)_i = v_{w^{-1}(i)}.
    Weight permuted(const Perm& w) const {
        std::vector<Rat> c(coords_.size());
        for (std::size_t i = 1; i <= coords_.size(); ++i) c[w(i) - 1] = coords_[i - 1];
        return Weight(std::move(c));
    }

    bool weakly_decreasing() const {
        for (std::size_t i = 0; i + 1 < coords_.size(); ++i)
            if (coords_[i] < coords_[i + 1]) return false;
        return true;
    }

    /// All pairwise coordinate differences integral.
    bool integral_spaced() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!is_integer(coords_[i] - coords_[0])) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += rat_to_string(coords_[i]);
        }
        return s;
    }

private:
    std::vector<Rat> coords_;
};

/// w . lambda = w(lambda + rho) - rho.
inline Weight dot_action(const Perm& w, const Weight& lam) {
    const Weight rho = Weight::rho(lam.n());
    return (lam + rho).permuted(w) - rho;
}

/// lambda is dominant when lambda + rho is weakly decreasing.
inline bool is_dominant(const Weight& lam) {
    return (lam + Weight::rho(lam.n())).weakly_decreasing();
}

/// Simple indices i with (lambda+rho)_i = (lambda+rho)_{i+1}; these generate
/// the stabilizer of lambda+rho.  Requires dominance.
inline ParabolicSet stabilizer(const Weight& lam) {
    const Weight v = lam + Weight::rho(lam.n());
    if (!v.weakly_decreasing())
        throw NotDominantError("stabilizer requires a dominant weight, got lambda+rho = " +
                               v.to_string());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i + 1 < v.n(); ++i)
        if (v[i] == v[i + 1]) idx.push_back(i + 1);
    return ParabolicSet(std::move(idx));
}

/// The distinct elements of the dot orbit W . lambda, deterministic order.
inline std::vector<Weight> dot_orbit(const Weight& lam) {
    std::vector<Weight> orbit;
    for (const auto& w : all_permutations(lam.n())) {
        const Weight mu = dot_action(w, lam);
        bool fresh = true;
        for (const auto& seen : orbit)
            if (seen == mu) {
                fresh = false;
                break;
            }
        if (fresh) orbit.push_back(mu);
    }
    return orbit;
}

/// Nonnegative counts (l_1..l_n) with sum l; the shape of a tensor weight.
struct TensorWeightDatum {
    std::vector<long> counts;

    long total() const {
        long t = 0;
        for (auto c : counts) t += c;
        return t;
    }

    Int multinomial() const {
        Int result = 1;
        long placed = 0;
        for (auto c : counts)
            for (long k = 1; k <= c; ++k) {
                ++placed;
                result = result * placed / k;
            }
        return result;
    }
};

/**
 * The unique (l_1..l_n) with lam - mu = sum l_i eps_i modulo the all-ones
 * line and sum l_i = l, when a nonnegative integral solution exists.
 */
inline std::optional<TensorWeightDatum> tensor_datum(const Weight& lam, const Weight& mu, long l) {
    const Weight diff = lam - mu;
    const std::size_t n = diff.n();
    TensorWeightDatum datum;
    datum.counts.resize(n);
    const Rat shift = Rat(l, static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Rat li = diff[i] + shift;
        if (!is_integer(li) || li < 0) return std::nullopt;
        datum.counts[i] = static_cast<long>(rat_num(li));
    }
    return datum;
}

/// dim (V^{tensor l})_nu as a weight space of sl_n, i.e. the multinomial of
/// the matching datum, or 0 when none exists.
inline Int tensor_weight_multiplicity(std::size_t n, long l, const Weight& nu) {
    const auto datum = tensor_datum(nu, Weight::zero(n), l);
    if (!datum) return 0;
    return datum->multinomial();
}

}  // namespace whecke
