#include "probplan/rational.h"

#include <cctype>
#include <limits>

using namespace std;

namespace probplan {
namespace {
optional<int64_t> parse_digits(string_view digits) {
    if (digits.empty())
        return nullopt;
    int64_t value = 0;
    for (char c : digits) {
        if (!isdigit(static_cast<unsigned char>(c)))
            return nullopt;
        if (value > (numeric_limits<int64_t>::max() - 9) / 10)
            return nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}
}

optional<Rational> parse_rational(string_view text) {
    if (text.empty())
        return nullopt;
    size_t slash = text.find('/');
    if (slash != string_view::npos) {
        auto num = parse_digits(text.substr(0, slash));
        auto den = parse_digits(text.substr(slash + 1));
        if (!num || !den || *den == 0)
            return nullopt;
        return Rational(*num, *den);
    }
    size_t dot = text.find('.');
    if (dot == string_view::npos) {
        auto num = parse_digits(text);
        if (!num)
            return nullopt;
        return Rational(*num);
    }
    string_view whole = text.substr(0, dot);
    string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty())
        return nullopt;
    if (frac.size() > 15)
        return nullopt;
    int64_t whole_value = 0;
    if (!whole.empty()) {
        auto w = parse_digits(whole);
        if (!w)
            return nullopt;
        whole_value = *w;
    }
    int64_t scale = 1;
    int64_t frac_value = 0;
    if (!frac.empty()) {
        auto f = parse_digits(frac);
        if (!f)
            return nullopt;
        frac_value = *f;
        for (size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
    }
    return Rational(whole_value) + Rational(frac_value, scale);
}

double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

string to_string(const Rational &r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}
}
