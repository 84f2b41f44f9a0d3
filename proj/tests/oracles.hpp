#pragma once

// Independent oracles for the test suites.  Everything here recomputes a
// quantity through a route different from the library's production path,
// so agreement is evidence rather than tautology.

#include <functional>
#include <map>
#include <vector>

#include "whecke/functor.hpp"
#include "whecke/verma.hpp"
#include "whecke/weight.hpp"

namespace whecke::oracles {

/// dim (V^{(x)l})_nu by brute enumeration of all n^l basis words.
inline Int tensor_multiplicity_by_enumeration(std::size_t n, long l, const Weight& nu) {
    Int count = 0;
    std::vector<std::size_t> word(static_cast<std::size_t>(l), 0);
    while (true) {
        std::vector<Rat> coords(n, Rat(0));
        for (const auto letter : word) coords[letter] += 1;
        if (Weight(std::move(coords)) == nu) ++count;
        std::size_t pos = word.size();
        while (pos > 0 && word[pos - 1] == n - 1) word[--pos] = 0;
        if (pos == 0) break;
        ++word[pos - 1];
    }
    return count;
}

/// Kostant partition count by dynamic programming over the positive roots,
/// independent of the library's monomial enumeration.
inline long kostant_count(const SlAlgebra& alg, const std::vector<long>& target) {
    // state: coordinate vector; iterate roots accumulating counts
    std::map<std::vector<long>, long> table;
    table[std::vector<long>(target.size(), 0)] = 1;
    long bound = 0;
    for (const auto t : target) bound += std::abs(t);
    for (std::size_t r = 0; r < alg.root_count(); ++r) {
        std::map<std::vector<long>, long> next;
        for (const auto& [vec, cnt] : table) {
            std::vector<long> grown = vec;
            for (long k = 0;; ++k) {
                long reach = 0;
                for (const auto x : grown) reach += std::abs(x);
                if (reach > bound) break;
                next[grown] += cnt;
                const auto& [a, b] = alg.pos_roots[r];
                grown[a - 1] += 1;
                grown[b - 1] -= 1;
                if (k > bound) break;
            }
        }
        table = std::move(next);
    }
    const auto it = table.find(target);
    return it == table.end() ? 0 : it->second;
}

/// Omega through the Casimir-difference identity
///   Omega_{i,j} = (C(pair) - C(i) - C(j)) / 2
/// with C the gl Casimir sum E_ab E_ba over all matrix units, acting on the
/// chosen pair of slots of the tensor block; an independent construction of
/// the same operator.
inline Mat omega_by_casimir_difference(const TensorBlock& tb, std::size_t i, std::size_t j) {
    const std::size_t n = tb.n();
    const auto act_at = [&](std::size_t slot, std::size_t a, std::size_t b, const TensorVec& v) {
        return slot == 0 ? tb.act_verma(a, b, v) : tb.act_slot(a, b, slot, v);
    };
    const auto casimir_on = [&](const std::vector<std::size_t>& slots) {
        return tb.to_matrix([&](const TensorVec& v0) {
            TensorVec total;
            for (std::size_t a = 1; a <= n; ++a)
                for (std::size_t b = 1; b <= n; ++b) {
                    // pair-coproduct of E_ab applied after pair-coproduct of E_ba
                    TensorVec inner;
                    for (const auto s : slots)
                        for (const auto& [k, c] : act_at(s, b, a, v0)) add_to(inner, k, c);
                    for (const auto s : slots)
                        for (const auto& [k, c] : act_at(s, a, b, inner)) add_to(total, k, c);
                }
            return total;
        });
    };
    const Mat pair = casimir_on({i, j});
    const Mat only_i = casimir_on({i});
    const Mat only_j = casimir_on({j});
    return (pair - only_i - only_j) * Rat(1, 2);
}

/// Matrix of the total action of E_cd as a map between two weight slices of
/// the same tensor product (columns in `from`, rows in `to`).
inline Mat act_matrix_between(const TensorBlock& from, const TensorBlock& to, std::size_t c,
                              std::size_t d) {
    std::map<TensorKey, std::size_t> to_index;
    for (std::size_t i = 0; i < to.dim(); ++i) to_index[to.basis()[i]] = i;
    Mat out(to.dim(), from.dim());
    for (std::size_t col = 0; col < from.dim(); ++col) {
        for (const auto& [key, coeff] : from.act_total(c, d, from.basis_vector(col))) {
            const auto it = to_index.find(key);
            if (it == to_index.end()) throw Error("image misses the target slice");
            out(it->second, col) = coeff;
        }
    }
    return out;
}

/// Deterministic pseudorandom rationals for property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_raw() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat next_rat() { return Rat(next_int(-6, 6), next_int(1, 4)); }

private:
    std::uint64_t state_;
};

}  // namespace whecke::oracles
