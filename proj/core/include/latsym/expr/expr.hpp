#pragma once

#include "latsym/index_window.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace latsym::expr {

/// Half-open [begin, end) character range into the original source text.
struct SourceSpan {
    size_t begin = 0;
    size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, SourceSpan span)
        : std::runtime_error(std::move(message)), span_(span) {}
    SourceSpan span() const { return span_; }

    /// Two-line diagnostic: the source followed by a caret marker.
    std::string pretty(const std::string& source) const;

private:
    SourceSpan span_;
};

enum class VarKind { x, t, u };
enum class BinaryOp { add, sub, mul, div, pow };
enum class CallFn { exp, ln, sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { number, variable, unary_minus, binary, call } kind;
    SourceSpan span;

    double number = 0.0;       // number
    VarKind var = VarKind::u;  // variable
    Offset offset;             // variable
    BinaryOp op = BinaryOp::add;
    CallFn fn = CallFn::exp;
    NodePtr lhs, rhs;          // binary: both; unary/call: lhs only
};

/// Parses the candidate-field grammar (see docs/expression-grammar.md):
/// identifiers x, t, u with optional shifts written u[+1,0], the usual
/// arithmetic with ^ for powers, and exp/ln/sqrt. Throws ParseError with a
/// source span on malformed input.
NodePtr parse(const std::string& source);

/// Values a stencil expression reads: (x,t,u) at the base point plus shifts.
struct StencilPoint {
    double x, t, u;
};
using StencilLookup = std::function<StencilPoint(Offset)>;

/// Evaluates over the lookup; domain errors (ln of a non-positive value,
/// sqrt of a negative one) throw std::domain_error.
double evaluate(const NodePtr& root, const StencilLookup& lookup);

/// Union of offsets referenced anywhere in the expression. A plain
/// identifier counts as offset (0,0).
std::vector<Offset> collect_stencil(const NodePtr& root);

/// True when the expression only reads the base point (0,0) — the shape a
/// point-field coefficient must have.
bool is_point_expression(const NodePtr& root);

} // namespace latsym::expr
