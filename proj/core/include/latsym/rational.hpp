#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace latsym {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Fields, grids and the residue oracles can run
/// entirely in this type; identities that the schemes satisfy then hold
/// bit-for-bit, not just to a tolerance.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q" (or just "p" when q == 1).
std::string to_fraction_string(const Rational& r);

/// Parses "p", "-p/q" or a plain integer. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

double to_double(const Rational& r);

/// r^e for integer e (negative allowed when r != 0).
Rational rational_pow(const Rational& r, long e);

/// Traits unifying the two arithmetic modes. S is double or Rational.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_long(long v) { return static_cast<double>(v); }
    static double from_rational(const Rational& r) { return to_double(r); }
    static double abs(double v) { return v < 0 ? -v : v; }
    static double to_double_value(double v) { return v; }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_long(long v) { return Rational(v); }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational abs(const Rational& v) { return v < 0 ? -v : v; }
    static double to_double_value(const Rational& v) { return to_double(v); }
};

enum class ArithmeticMode { ieee_double, exact_rational };

std::string to_string(ArithmeticMode mode);
ArithmeticMode arithmetic_mode_from_string(std::string_view text);

} // namespace latsym
