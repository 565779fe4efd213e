#include "elltor/expr.hpp"

namespace elltor::cli {

using algebra::PrimeField;
using algebra::RationalFunction;
using algebra::RationalFunctionField;

namespace {

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < src_.size())
            die("unexpected character '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

  private:
    [[noreturn]] void die(const std::string& msg) {
        throw SyntaxError(static_cast<int>(pos_) + 1, msg + " at column " +
                                                          std::to_string(pos_ + 1));
    }

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    static ExprPtr make(ExprNode::Kind k, ExprPtr l = nullptr, ExprPtr r = nullptr) {
        auto n = std::make_shared<ExprNode>();
        n->kind = k;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (consume('+'))
                e = make(ExprNode::Kind::Add, e, term());
            else if (consume('-'))
                e = make(ExprNode::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (consume('*'))
                e = make(ExprNode::Kind::Mul, e, factor());
            else if (consume('/'))
                e = make(ExprNode::Kind::Div, e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        int negations = 0;
        while (consume('-')) ++negations;
        ExprPtr e = base();
        if (consume('^')) {
            auto n = make(ExprNode::Kind::Pow, e);
            n->exponent = natural();
            e = n;
        }
        for (int i = 0; i < negations; ++i) e = make(ExprNode::Kind::Neg, e);
        return e;
    }

    ExprPtr base() {
        skip_ws();
        if (pos_ >= src_.size()) die("unexpected end of input");
        char c = src_[pos_];
        if (c == 't') {
            ++pos_;
            return make(ExprNode::Kind::Var);
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!consume(')')) die("expected ')'");
            return e;
        }
        if (c >= '0' && c <= '9') {
            auto n = make(ExprNode::Kind::Int);
            n->value = static_cast<int64_t>(natural());
            return n;
        }
        die(std::string("unexpected character '") + c + "'");
    }

    uint32_t natural() {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] < '0' || src_[pos_] > '9')
            die("expected a nonnegative integer");
        uint64_t v = 0;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
            v = v * 10 + static_cast<uint64_t>(src_[pos_] - '0');
            if (v > 1000000000) die("integer literal too large");
            ++pos_;
        }
        return static_cast<uint32_t>(v);
    }

    std::string_view src_;
    size_t pos_ = 0;
};

int precedence(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub: return 1;
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::Div: return 2;
        case ExprNode::Kind::Neg: return 3;
        case ExprNode::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string print_rec(const ExprNode& n, int parent_prec, bool right_side) {
    int prec = precedence(n.kind);
    std::string body;
    switch (n.kind) {
        case ExprNode::Kind::Int: body = std::to_string(n.value); break;
        case ExprNode::Kind::Var: body = "t"; break;
        case ExprNode::Kind::Add:
            body = print_rec(*n.lhs, prec, false) + "+" + print_rec(*n.rhs, prec, true);
            break;
        case ExprNode::Kind::Sub:
            body = print_rec(*n.lhs, prec, false) + "-" + print_rec(*n.rhs, prec, true);
            break;
        case ExprNode::Kind::Mul:
            body = print_rec(*n.lhs, prec, false) + "*" + print_rec(*n.rhs, prec, true);
            break;
        case ExprNode::Kind::Div:
            body = print_rec(*n.lhs, prec, false) + "/" + print_rec(*n.rhs, prec, true);
            break;
        case ExprNode::Kind::Neg:
            body = "-" + print_rec(*n.lhs, prec, false);
            break;
        case ExprNode::Kind::Pow:
            // operand of '^' must be a Base, so parenthesize compounds
            body = print_rec(*n.lhs, prec, false) + "^" + std::to_string(n.exponent);
            break;
    }
    // Left-associative operators need parens when a same-precedence node
    // sits on the right; Neg needs them when feeding '*' or '/'.
    bool need = prec < parent_prec || (right_side && prec == parent_prec);
    if (need) return "(" + body + ")";
    return body;
}

} // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string pretty_print(const ExprNode& node) { return print_rec(node, 0, false); }

bool ast_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind || a.value != b.value || a.exponent != b.exponent)
        return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
    if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
    if (a.lhs && !ast_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !ast_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

RationalFunction<PrimeField> eval_expr(
    const ExprNode& node, const RationalFunctionField<PrimeField>& field) {
    switch (node.kind) {
        case ExprNode::Kind::Int: return field.from_int(node.value);
        case ExprNode::Kind::Var: return field.variable();
        case ExprNode::Kind::Add:
            return field.add(eval_expr(*node.lhs, field), eval_expr(*node.rhs, field));
        case ExprNode::Kind::Sub:
            return field.sub(eval_expr(*node.lhs, field), eval_expr(*node.rhs, field));
        case ExprNode::Kind::Mul:
            return field.mul(eval_expr(*node.lhs, field), eval_expr(*node.rhs, field));
        case ExprNode::Kind::Div: {
            auto den = eval_expr(*node.rhs, field);
            if (field.is_zero(den))
                fail(ErrorCode::ZeroDenominator, "division by the zero function");
            return field.div(eval_expr(*node.lhs, field), den);
        }
        case ExprNode::Kind::Neg: return field.neg(eval_expr(*node.lhs, field));
        case ExprNode::Kind::Pow: {
            auto base = eval_expr(*node.lhs, field);
            int64_t deg = std::max(base.num.degree(), base.den.degree());
            if (deg > 0 && static_cast<int64_t>(node.exponent) * deg > 20000)
                fail(ErrorCode::ExponentGuard, "exponent makes degrees exceed guard");
            return field.pow(base, node.exponent);
        }
    }
    fail(ErrorCode::PrecondViolation, "unreachable expression kind");
}

} // namespace elltor::cli
