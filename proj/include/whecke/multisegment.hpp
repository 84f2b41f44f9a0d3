#pragma once

/**
 * @file multisegment.hpp
 * @brief Segments and multisegments: the combinatorial parameters of
 *        standard modules of the graded affine Hecke algebra in type A.
 *
 * A segment is a run {start, start+1, ..., start+length-1} of rationals.
 * A multisegment class is an unordered collection of segments, stored by a
 * canonical representative: centers weakly decreasing, ties broken by start
 * descending then length descending.
 */

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "whecke/matrix.hpp"
#include "whecke/weight.hpp"

namespace whecke {

struct Segment {
    Rat start;
    long length = 1;  // always positive

    Rat center() const { return start + Rat(length - 1, 2); }
    Rat top() const { return start + Rat(length - 1); }

    std::vector<Rat> values() const {
        std::vector<Rat> out;
        out.reserve(static_cast<std::size_t>(length));
        for (long k = 0; k < length; ++k) out.push_back(start + Rat(k));
        return out;
    }

    bool operator==(const Segment& o) const { return start == o.start && length == o.length; }

    /// Canonical segment order: center desc, then start desc, then length desc.
    bool canonical_before(const Segment& o) const {
        if (center() != o.center()) return center() > o.center();
        if (start != o.start) return start > o.start;
        return length > o.length;
    }
};

/// An ordered collection of segments (order significant).
struct Multisegment {
    std::vector<Segment> segments;

    long support_size() const {
        long s = 0;
        for (const auto& seg : segments) s += seg.length;
        return s;
    }
};

/// The multiset of all segment entries, sorted descending.
inline std::vector<Rat> support(const Multisegment& tau) {
    std::vector<Rat> out;
    for (const auto& seg : tau.segments) {
        const auto vals = seg.values();
        out.insert(out.end(), vals.begin(), vals.end());
    }
    std::sort(out.begin(), out.end(), std::greater<Rat>());
    return out;
}

/// Equivalence class under reordering, held by the canonical representative.
class MultisegmentClass {
public:
    MultisegmentClass() = default;
    explicit MultisegmentClass(Multisegment tau) : canonical_(std::move(tau)) {
        std::sort(canonical_.segments.begin(), canonical_.segments.end(),
                  [](const Segment& a, const Segment& b) { return a.canonical_before(b); });
    }

    const Multisegment& canonical() const { return canonical_; }
    const std::vector<Segment>& segments() const { return canonical_.segments; }
    long support_size() const { return canonical_.support_size(); }

    std::vector<long> segment_lengths() const {
        std::vector<long> out;
        for (const auto& s : canonical_.segments) out.push_back(s.length);
        return out;
    }

    bool operator==(const MultisegmentClass& o) const {
        return segments().size() == o.segments().size() &&
               std::equal(segments().begin(), segments().end(), o.segments().begin());
    }
    bool operator!=(const MultisegmentClass& o) const { return !(*this == o); }

    bool operator<(const MultisegmentClass& o) const {
        const auto &a = segments(), &b = o.segments();
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].start != b[i].start) return a[i].start < b[i].start;
            if (a[i].length != b[i].length) return a[i].length < b[i].length;
        }
        return false;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < segments().size(); ++i) {
            if (i) s += ",";
            s += "(" + rat_to_string(segments()[i].start) + "," +
                 std::to_string(segments()[i].length) + ")";
        }
        return s + "]";
    }

private:
    Multisegment canonical_;
};

inline std::vector<Rat> support(const MultisegmentClass& tau) { return support(tau.canonical()); }

namespace detail {

inline void enumerate_partitions(std::vector<Rat> remaining, Multisegment& current,
                                 std::set<MultisegmentClass>& out) {
    if (remaining.empty()) {
        out.insert(MultisegmentClass(current));
        return;
    }
    // The maximum remaining value must be the top of its segment, so try
    // every run descending from it.
    std::sort(remaining.begin(), remaining.end(), std::greater<Rat>());
    const Rat top = remaining.front();
    for (long len = 1;; ++len) {
        // need top, top-1, ..., top-len+1 available
        std::vector<Rat> rest = remaining;
        bool ok = true;
        for (long k = 0; k < len; ++k) {
            const Rat v = top - Rat(k);
            auto it = std::find(rest.begin(), rest.end(), v);
            if (it == rest.end()) {
                ok = false;
                break;
            }
            rest.erase(it);
        }
        if (!ok) break;
        current.segments.push_back(Segment{top - Rat(len - 1), len});
        enumerate_partitions(rest, current, out);
        current.segments.pop_back();
    }
}

}  // namespace detail

/**
 * All multisegment classes with support equal to the coordinate multiset of
 * lamrho (which must be integral-spaced).  Deterministic order.
 */
inline std::vector<MultisegmentClass> ms_classes(const Weight& lamrho) {
    if (!lamrho.integral_spaced())
        throw NotIntegralSpacedError("ms_classes requires integral-spaced support, got " +
                                     lamrho.to_string());
    std::vector<Rat> sup(lamrho.coords());
    std::set<MultisegmentClass> out;
    Multisegment scratch;
    detail::enumerate_partitions(std::move(sup), scratch, out);
    return {out.begin(), out.end()};
}

/**
 * The multisegment delta_{lambda,mu}: segment i runs from (mu+rho)_i with
 * length l_i taken from the tensor datum of (lambda, mu, l); zero-length
 * entries are dropped.  Requires lambda dominant and an existing datum.
 */
inline MultisegmentClass delta(const Weight& lam, const Weight& mu, long l) {
    if (!is_dominant(lam))
        throw NotDominantError("delta requires dominant lambda, got " + lam.to_string());
    const auto datum = tensor_datum(lam, mu, l);
    if (!datum)
        throw NoTensorDatumError("no tensor weight datum for (" + lam.to_string() + ") - (" +
                                 mu.to_string() + ") with l = " + std::to_string(l));
    const Weight murho = mu + Weight::rho(mu.n());
    Multisegment tau;
    for (std::size_t i = 0; i < datum->counts.size(); ++i)
        if (datum->counts[i] > 0) tau.segments.push_back(Segment{murho[i], datum->counts[i]});
    return MultisegmentClass(std::move(tau));
}

/// The weight of the canonical generator of the standard module: each
/// canonical segment's entries in increasing order, concatenated.
inline std::vector<Rat> zeta_weight(const MultisegmentClass& tau) {
    std::vector<Rat> out;
    for (const auto& seg : tau.segments()) {
        const auto vals = seg.values();
        out.insert(out.end(), vals.begin(), vals.end());
    }
    return out;
}

/**
 * The nilpotent matrix representative x_tau of the graded class: a 1 in
 * position (i, i+1) for every i strictly inside a segment block, written in
 * the basis ordered by the sorted support (weakly decreasing), so that the
 * result lies in the degree-one piece of the grading.
 */
inline Mat nilpotent_rep(const MultisegmentClass& tau) {
    // Concatenate each segment's values in decreasing order; that is the
    // diagonal in the paper's segment-adapted basis.
    std::vector<Rat> diag;
    std::vector<std::size_t> block_of;
    for (std::size_t s = 0; s < tau.segments().size(); ++s) {
        const auto& seg = tau.segments()[s];
        for (long k = seg.length - 1; k >= 0; --k) {
            diag.push_back(seg.start + Rat(k));
            block_of.push_back(s);
        }
    }
    const std::size_t n = diag.size();
    // Stable sort to the weakly decreasing diagonal; pi maps segment-adapted
    // indices to sorted indices.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (diag[a] != diag[b]) return diag[a] > diag[b];
        return false;
    });
    std::vector<std::size_t> pi(n);
    for (std::size_t pos = 0; pos < n; ++pos) pi[order[pos]] = pos;

    Mat out(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (block_of[i] == block_of[i + 1]) out(pi[i], pi[i + 1]) = 1;
    return out;
}

}  // namespace whecke
