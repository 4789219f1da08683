#include "happylab/rational.hpp"

#include <cctype>
#include <cstdio>

#include "happylab/errors.hpp"

namespace happylab {

Rat rat_of(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

mpz_class mpz_from(const std::string& s) {
    try {
        return mpz_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad number '" + s + "'");
    }
}

}  // namespace

Rat rat_from_string(const std::string& raw) {
    size_t a = raw.find_first_not_of(" \t\r\n");
    size_t b = raw.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) throw ParseError("empty number");
    std::string s = raw.substr(a, b - a + 1);

    if (size_t slash = s.find('/'); slash != std::string::npos) {
        mpz_class num = mpz_from(s.substr(0, slash));
        mpz_class den = mpz_from(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    if (size_t dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("bad number '" + s + "'");
        mpz_class num = mpz_from(digits);
        mpz_class den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    return Rat(mpz_from(s));
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

std::string rat_to_decimal(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.get_d());
    return buf;
}

double rat_to_double(const Rat& r) {
    return r.get_d();
}

}  // namespace happylab
