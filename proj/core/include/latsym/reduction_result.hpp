#pragma once

#include "latsym/index_window.hpp"
#include "latsym/rational.hpp"

#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace latsym {

/// One value slot in a reduction report; rendered deterministically in
/// serialized output.
using ReductionValue = std::variant<long, double, Rational, std::string>;

std::string render(const ReductionValue& v);

/// Structured outcome of a symmetry reduction: the constraint imposed, the
/// symmetry variable, the reduced equation, and (where one exists) the
/// closed-form solution with the largest residual observed when it was
/// re-substituted into the scheme.
struct ReductionResult {
    std::string scheme;     // "heat" | "dttl"
    std::string symmetry;   // "translation" | "dilation" | "isospectral" | "nonisospectral"
    std::string mode;       // "point" | "evolutionary"
    std::string constraint;
    std::string symmetry_variable;
    std::string reduced_equation;
    std::string solution_closed_form; // empty when no closed form is attached
    double residual_max = std::numeric_limits<double>::quiet_NaN();
    IndexWindow window;
    std::vector<std::pair<std::string, ReductionValue>> values;

    void set(std::string key, ReductionValue v) {
        values.emplace_back(std::move(key), std::move(v));
    }
    const ReductionValue* find(std::string_view key) const;
};

} // namespace latsym
