#pragma once

/**
 * @file literals.hpp
 * @brief Parsing of the CLI literal syntaxes: weights "1/2,-1/2",
 *        permutations "3,1,4,2", parabolic sets "1,2" / "none" / "auto",
 *        multisegments "[(-1/2,2),(1/2,1)]" as (start,length) pairs.
 */

#include <string>
#include <string_view>
#include <vector>

#include "whecke/multisegment.hpp"
#include "whecke/permutation.hpp"
#include "whecke/weight.hpp"

namespace whecke {

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (const char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

}  // namespace detail

inline Weight parse_weight(std::string_view text) {
    std::vector<Rat> coords;
    for (const auto& part : detail::split(text, ',')) coords.push_back(parse_rat(part));
    if (coords.empty()) throw ParseError("empty weight literal");
    return Weight(std::move(coords));
}

inline Perm parse_perm(std::string_view text) {
    std::vector<std::size_t> images;
    for (const auto& part : detail::split(text, ',')) {
        try {
            images.push_back(static_cast<std::size_t>(std::stoul(part)));
        } catch (const std::exception&) {
            throw ParseError("malformed permutation literal: '" + std::string(text) + "'");
        }
    }
    return Perm::from_one_line(images);
}

/// "none" or "0" is the empty set; otherwise a comma list of simple indices.
inline ParabolicSet parse_parabolic(std::string_view text) {
    if (text.empty() || text == "none" || text == "0") return ParabolicSet{};
    std::vector<std::size_t> idx;
    for (const auto& part : detail::split(text, ',')) {
        try {
            idx.push_back(static_cast<std::size_t>(std::stoul(part)));
        } catch (const std::exception&) {
            throw ParseError("malformed simple-index list: '" + std::string(text) + "'");
        }
    }
    return ParabolicSet(std::move(idx));
}

/// "[(start,length),...]", start rational, length a positive integer.
inline MultisegmentClass parse_multisegment(std::string_view text) {
    Multisegment tau;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("malformed multisegment literal: expected '" + std::string(1, c) +
                             "' in '" + std::string(text) + "'");
        ++pos;
    };
    expect('[');
    skip_ws();
    if (pos < text.size() && text[pos] == ']') return MultisegmentClass(tau);
    while (true) {
        expect('(');
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',') ++pos;
        const Rat seg_start = parse_rat(std::string_view(text).substr(start, pos - start));
        expect(',');
        skip_ws();
        start = pos;
        while (pos < text.size() && text[pos] != ')') ++pos;
        long seg_len = 0;
        try {
            seg_len = std::stol(std::string(text.substr(start, pos - start)));
        } catch (const std::exception&) {
            throw ParseError("malformed segment length");
        }
        if (seg_len < 1) throw ParseError("segment length must be positive");
        expect(')');
        tau.segments.push_back(Segment{seg_start, seg_len});
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    return MultisegmentClass(tau);
}

}  // namespace whecke
