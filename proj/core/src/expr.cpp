#include "latsym/expr/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>

namespace latsym::expr {

std::string ParseError::pretty(const std::string& source) const {
    std::string out = source + "\n";
    const size_t b = std::min(span_.begin, source.size());
    const size_t e = std::max(b + 1, std::min(span_.end, source.size() + 1));
    out += std::string(b, ' ') + std::string(e - b, '^') + " " + what();
    return out;
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen,
                 lbracket, rbracket, comma, end };

struct Token {
    Tok kind;
    SourceSpan span;
    double number = 0.0;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::end, {start, start + 1}};
        const char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Tok::plus, {start, pos_}};
            case '-': ++pos_; return {Tok::minus, {start, pos_}};
            case '*': ++pos_; return {Tok::star, {start, pos_}};
            case '/': ++pos_; return {Tok::slash, {start, pos_}};
            case '^': ++pos_; return {Tok::caret, {start, pos_}};
            case '(': ++pos_; return {Tok::lparen, {start, pos_}};
            case ')': ++pos_; return {Tok::rparen, {start, pos_}};
            case '[': ++pos_; return {Tok::lbracket, {start, pos_}};
            case ']': ++pos_; return {Tok::rbracket, {start, pos_}};
            case ',': ++pos_; return {Tok::comma, {start, pos_}};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                size_t save = pos_;
                ++pos_;
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        ++pos_;
                } else {
                    pos_ = save;
                }
            }
            Token t{Tok::number, {start, pos_}};
            t.text = src_.substr(start, pos_ - start);
            char* endp = nullptr;
            t.number = std::strtod(t.text.c_str(), &endp);
            if (endp != t.text.c_str() + t.text.size())
                throw ParseError("malformed number '" + t.text + "'", t.span);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
            Token t{Tok::ident, {start, pos_}};
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
    }

private:
    const std::string& src_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src), lex_(src) { advance(); }

    NodePtr run() {
        NodePtr e = expression();
        if (cur_.kind != Tok::end)
            throw ParseError("unexpected trailing input", cur_.span);
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool accept(Tok k) {
        if (cur_.kind != k) return false;
        prev_ = cur_;
        advance();
        return true;
    }

    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, cur_.span);
    }

    NodePtr expression() {
        NodePtr lhs = term();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const BinaryOp op = cur_.kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
            advance();
            NodePtr rhs = term();
            lhs = binary(op, lhs, rhs);
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
            const BinaryOp op = cur_.kind == Tok::star ? BinaryOp::mul : BinaryOp::div;
            advance();
            NodePtr rhs = unary();
            lhs = binary(op, lhs, rhs);
        }
        return lhs;
    }

    NodePtr unary() {
        if (accept(Tok::plus)) return unary();
        if (accept(Tok::minus)) {
            SourceSpan s = prev_.span;
            NodePtr operand = unary();
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::unary_minus;
            n->span = {s.begin, operand->span.end};
            n->lhs = operand;
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept(Tok::caret)) {
            NodePtr exponent = unary(); // right associative, sign binds to exponent
            return binary(BinaryOp::pow, base, exponent);
        }
        return base;
    }

    NodePtr primary() {
        if (accept(Tok::number)) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::number;
            n->span = prev_.span;
            n->number = prev_.number;
            return n;
        }
        if (accept(Tok::lparen)) {
            NodePtr e = expression();
            expect(Tok::rparen, "')'");
            return e;
        }
        if (accept(Tok::ident)) {
            const Token id = prev_;
            if (id.text == "x" || id.text == "t" || id.text == "u") {
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::variable;
                n->span = id.span;
                n->var = id.text == "x" ? VarKind::x : id.text == "t" ? VarKind::t : VarKind::u;
                if (accept(Tok::lbracket)) {
                    n->offset.dm = shift_integer();
                    expect(Tok::comma, "','");
                    n->offset.dn = shift_integer();
                    expect(Tok::rbracket, "']'");
                    n->span.end = prev_.span.end;
                }
                return n;
            }
            CallFn fn;
            if (id.text == "exp") fn = CallFn::exp;
            else if (id.text == "ln") fn = CallFn::ln;
            else if (id.text == "sqrt") fn = CallFn::sqrt;
            else throw ParseError("unknown identifier '" + id.text + "'", id.span);
            expect(Tok::lparen, "'(' after function name");
            NodePtr arg = expression();
            expect(Tok::rparen, "')'");
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::call;
            n->span = {id.span.begin, prev_.span.end};
            n->fn = fn;
            n->lhs = arg;
            return n;
        }
        throw ParseError("expected a number, identifier or '('", cur_.span);
    }

    long shift_integer() {
        long sign = 1;
        if (accept(Tok::minus)) sign = -1;
        else accept(Tok::plus);
        if (!accept(Tok::number))
            throw ParseError("expected an integer shift", cur_.span);
        const double v = prev_.number;
        const long iv = static_cast<long>(v);
        if (static_cast<double>(iv) != v)
            throw ParseError("shift must be an integer", prev_.span);
        return sign * iv;
    }

    NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::binary;
        n->span = {lhs->span.begin, rhs->span.end};
        n->op = op;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    const std::string& src_;
    Lexer lex_;
    Token cur_{Tok::end, {0, 0}};
    Token prev_{Tok::end, {0, 0}};
};

} // namespace

NodePtr parse(const std::string& source) { return Parser(source).run(); }

double evaluate(const NodePtr& root, const StencilLookup& lookup) {
    switch (root->kind) {
        case Node::Kind::number: return root->number;
        case Node::Kind::variable: {
            const StencilPoint p = lookup(root->offset);
            switch (root->var) {
                case VarKind::x: return p.x;
                case VarKind::t: return p.t;
                case VarKind::u: return p.u;
            }
            break;
        }
        case Node::Kind::unary_minus: return -evaluate(root->lhs, lookup);
        case Node::Kind::binary: {
            const double a = evaluate(root->lhs, lookup);
            const double b = evaluate(root->rhs, lookup);
            switch (root->op) {
                case BinaryOp::add: return a + b;
                case BinaryOp::sub: return a - b;
                case BinaryOp::mul: return a * b;
                case BinaryOp::div:
                    if (b == 0.0) throw std::domain_error("division by zero");
                    return a / b;
                case BinaryOp::pow: return std::pow(a, b);
            }
            break;
        }
        case Node::Kind::call: {
            const double a = evaluate(root->lhs, lookup);
            switch (root->fn) {
                case CallFn::exp: return std::exp(a);
                case CallFn::ln:
                    if (!(a > 0.0)) throw std::domain_error("ln of a non-positive value");
                    return std::log(a);
                case CallFn::sqrt:
                    if (a < 0.0) throw std::domain_error("sqrt of a negative value");
                    return std::sqrt(a);
            }
            break;
        }
    }
    throw std::logic_error("expr::evaluate: malformed node");
}

namespace {
void collect(const NodePtr& n, std::set<std::pair<long, long>>& out) {
    if (!n) return;
    if (n->kind == Node::Kind::variable) out.insert({n->offset.dm, n->offset.dn});
    collect(n->lhs, out);
    collect(n->rhs, out);
}
} // namespace

std::vector<Offset> collect_stencil(const NodePtr& root) {
    std::set<std::pair<long, long>> s;
    collect(root, s);
    std::vector<Offset> out;
    out.reserve(s.size());
    for (const auto& [dm, dn] : s) out.push_back(Offset{dm, dn});
    return out;
}

bool is_point_expression(const NodePtr& root) {
    for (const Offset& o : collect_stencil(root))
        if (o.dm != 0 || o.dn != 0) return false;
    return true;
}

} // namespace latsym::expr
