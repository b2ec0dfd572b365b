#include "latsym/heat/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace latsym {

const char* to_string(HeatOperator op) {
    switch (op) {
        case HeatOperator::P0: return "P0";
        case HeatOperator::P1: return "P1";
        case HeatOperator::W: return "W";
        case HeatOperator::B: return "B";
        case HeatOperator::D: return "D";
        case HeatOperator::K: return "K";
    }
    return "?";
}

HeatOperator heat_operator_from_string(std::string_view name) {
    if (name == "P0") return HeatOperator::P0;
    if (name == "P1") return HeatOperator::P1;
    if (name == "W") return HeatOperator::W;
    if (name == "B") return HeatOperator::B;
    if (name == "D") return HeatOperator::D;
    if (name == "K") return HeatOperator::K;
    throw std::invalid_argument("unknown heat operator '" + std::string(name) + "'");
}

std::span<const BracketRelation> heat_bracket_table() {
    using H = HeatOperator;
    // order of coeff entries: P0, P1, W, B, D, K
    static const BracketRelation table[] = {
        {H::P0, H::P1, {0, 0, 0, 0, 0, 0}},
        {H::P0, H::W, {0, 0, 0, 0, 0, 0}},
        {H::P0, H::B, {0, 2, 0, 0, 0, 0}},
        {H::P0, H::D, {2, 0, 0, 0, 0, 0}},
        {H::P0, H::K, {0, 0, 0, 0, 1, 0}},
        {H::P1, H::W, {0, 0, 0, 0, 0, 0}},
        {H::P1, H::B, {0, 0, 1, 0, 0, 0}},
        {H::P1, H::D, {0, 1, 0, 0, 0, 0}},
        {H::P1, H::K, {0, 0, 0, 0.5, 0, 0}},
        {H::W, H::B, {0, 0, 0, 0, 0, 0}},
        {H::W, H::D, {0, 0, 0, 0, 0, 0}},
        {H::W, H::K, {0, 0, 0, 0, 0, 0}},
        {H::B, H::D, {0, 0, 0, -1, 0, 0}},
        {H::B, H::K, {0, 0, 0, 0, 0, 0}},
        {H::D, H::K, {0, 0, 0, 0, 0, 2}},
    };
    return table;
}

double heat_bracket_closure_defect(const std::array<EvolutionaryCharacteristic<double>, 6>& ops,
                                   const BracketRelation& rel, const Field<double>& f) {
    const auto idx = [](HeatOperator op) { return static_cast<size_t>(op); };
    const EvolutionaryCharacteristic<double>& A = ops[idx(rel.first)];
    const EvolutionaryCharacteristic<double>& B = ops[idx(rel.second)];

    Field<double> bf = characteristic_field(B, f);
    Field<double> af = characteristic_field(A, f);
    Field<double> ab = characteristic_field(A, bf);
    Field<double> ba = characteristic_field(B, af);

    IndexWindow w = ab.window().intersect(ba.window());
    double scale = std::max({f.max_abs(), ab.max_abs(), ba.max_abs(), 1.0});

    std::array<Field<double>*, 6> span_fields{};
    std::array<std::optional<Field<double>>, 6> storage;
    for (size_t k = 0; k < 6; ++k) {
        if (rel.coeff[k] == 0.0) continue;
        storage[k].emplace(characteristic_field(ops[k], f));
        span_fields[k] = &*storage[k];
        w = w.intersect(storage[k]->window());
        scale = std::max(scale, std::abs(rel.coeff[k]) * storage[k]->max_abs());
    }
    if (w.empty())
        throw std::invalid_argument("heat_bracket_closure_defect: window exhausted");

    double worst = 0.0;
    for (long n = w.n_lo; n <= w.n_hi; ++n) {
        for (long m = w.m_lo; m <= w.m_hi; ++m) {
            double v = ab.at(m, n) - ba.at(m, n);
            for (size_t k = 0; k < 6; ++k)
                if (span_fields[k]) v -= rel.coeff[k] * span_fields[k]->at(m, n);
            worst = std::max(worst, std::abs(v));
        }
    }
    return worst / scale;
}

} // namespace latsym
