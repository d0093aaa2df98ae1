#include "gkd/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gkd {

namespace {

[[noreturn]] void fail_parse(std::string_view token) {
    throw std::invalid_argument("malformed rational: '" + std::string(token) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        fail_parse(text);

    int sign = 1;
    if (s.front() == '+' || s.front() == '-') {
        sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
    }

    if (size_t slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            fail_parse(text);
        Int d{std::string(den)};
        if (d == 0)
            fail_parse(text);
        return Rational(sign * Int{std::string(num)}, d);
    }

    // decimal: digits [ '.' digits ] with at least one digit overall
    std::string_view ipart = s;
    std::string_view fpart{};
    if (size_t dot = s.find('.'); dot != std::string_view::npos) {
        ipart = s.substr(0, dot);
        fpart = s.substr(dot + 1);
        if (fpart.find('.') != std::string_view::npos)
            fail_parse(text);
    }
    if (ipart.empty() && fpart.empty())
        fail_parse(text);
    if (!ipart.empty() && !all_digits(ipart))
        fail_parse(text);
    if (!fpart.empty() && !all_digits(fpart))
        fail_parse(text);

    Int numer = ipart.empty() ? Int(0) : Int{std::string(ipart)};
    Int denom = 1;
    for (char c : fpart) {
        numer = numer * 10 + (c - '0');
        denom *= 10;
    }
    return Rational(sign * numer, denom);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (trim(text).empty())
        return out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string_view piece = comma == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& value) {
    Int n = numerator(value);
    Int d = denominator(value);
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

bool is_half_integer(const Rational& value) {
    return denominator(value) == 2;
}

Int floor_int(const Rational& value) {
    Int n = numerator(value);
    Int d = denominator(value);
    Int q = n / d;  // truncates toward zero
    if (n % d != 0 && n < 0)
        --q;
    return q;
}

Int ceil_int(const Rational& value) {
    return -floor_int(-value);
}

Rational residue_mod1(const Rational& value) {
    return value - Rational(floor_int(value));
}

}  // namespace gkd
