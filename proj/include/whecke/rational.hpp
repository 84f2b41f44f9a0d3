#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "whecke/errors.hpp"

namespace whecke {

// Every scalar in the library is an exact rational.  Values are kept in
// canonical form (reduced, positive denominator) by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// "p/q" with the "/q" omitted for integers.  This is the wire format used
/// by the CLI; parse_rat accepts the same syntax.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p", "-p", or "p/q".  Throws ParseError on malformed input.
inline Rat parse_rat(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        const Int num{std::string(text.substr(0, slash))};
        const Int den{std::string(text.substr(slash + 1))};
        if (den == 0) throw ParseError("zero denominator in rational literal");
        return Rat(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    }
}

}  // namespace whecke
