#ifndef PROBPLAN_RATIONAL_H
#define PROBPLAN_RATIONAL_H

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace probplan {
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "0.75", ".5", "1/3". Decimals are converted exactly.
std::optional<Rational> parse_rational(std::string_view text);

double to_double(const Rational &r);
std::string to_string(const Rational &r);
}

#endif
