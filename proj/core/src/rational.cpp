#include "latsym/rational.hpp"

#include <stdexcept>

namespace latsym {

std::string to_fraction_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "': " + e.what());
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw std::domain_error("0 raised to a negative power");
    const bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational base = r;
    Rational acc(1);
    while (k != 0) {
        if (k & 1UL) acc *= base;
        base *= base;
        k >>= 1UL;
    }
    if (inv) acc = Rational(1) / acc;
    return acc;
}

std::string to_string(ArithmeticMode mode) {
    return mode == ArithmeticMode::exact_rational ? "rational" : "double";
}

ArithmeticMode arithmetic_mode_from_string(std::string_view text) {
    if (text == "double" || text == "ieee_double") return ArithmeticMode::ieee_double;
    if (text == "rational" || text == "exact" || text == "exact_rational")
        return ArithmeticMode::exact_rational;
    throw std::invalid_argument("unknown arithmetic mode '" + std::string(text) + "'");
}

} // namespace latsym
