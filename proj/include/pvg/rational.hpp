#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "pvg/errors.hpp"

namespace pvg {

using Rational = mpq_class;

// Parses "-?digits" or "-?digits/digits". Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (body[0] == '-') {
        neg = true;
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!digits(num) || !digits(den)) return std::nullopt;
    if (den == "0") return std::nullopt;
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

inline std::string to_string(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

}  // namespace pvg
