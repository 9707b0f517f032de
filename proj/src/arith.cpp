#include "hyperlat/arith.hpp"

#include <cctype>

namespace hyperlat {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw ParseError("bad rational literal: " + text);

    // p/q form
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational literal: " + text);
        Rat q = make_rat(Int(num), Int(den));
        if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
        return negative ? Rat(-q) : q;
    }

    // decimal with optional exponent
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string expstr = s.substr(epos + 1);
        s = s.substr(0, epos);
        if (expstr.empty()) throw ParseError("bad rational literal: " + text);
        bool eneg = false;
        if (expstr[0] == '+' || expstr[0] == '-') {
            eneg = (expstr[0] == '-');
            expstr.erase(0, 1);
        }
        if (!all_digits(expstr) || expstr.size() > 6)
            throw ParseError("bad rational literal: " + text);
        exp10 = std::stol(expstr);
        if (eneg) exp10 = -exp10;
    }

    std::string digits = s;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty()) digits = "0";
    if (!all_digits(digits)) throw ParseError("bad rational literal: " + text);

    Int mantissa(digits);
    Int pow10(1);
    Int ten(10);
    for (long i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) pow10 *= ten;
    Rat q = exp10 >= 0 ? Rat(mantissa * pow10) : make_rat(mantissa, pow10);
    return negative ? Rat(-q) : q;
}

}  // namespace hyperlat
