#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "elltor/rational_function.hpp"
#include "elltor/prime_field.hpp"

namespace elltor::cli {

// AST for rational-function expressions in the variable t.
//
// Grammar (left associative, '^' binds tightest, unary minus allowed
// before a base and applied after exponentiation):
//   Expr   := Term (('+'|'-') Term)*
//   Term   := Factor (('*'|'/') Factor)*
//   Factor := '-'* Base ('^' Nat)?
//   Base   := Int | 't' | '(' Expr ')'
struct ExprNode {
    enum class Kind { Int, Var, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind = Kind::Int;
    int64_t value = 0;       // Int
    uint32_t exponent = 0;   // Pow
    std::shared_ptr<ExprNode> lhs;
    std::shared_ptr<ExprNode> rhs; // binary ops only
};

using ExprPtr = std::shared_ptr<ExprNode>;

// Raises SyntaxError (with 1-based column) on malformed input.
ExprPtr parse_expr(std::string_view src);

// Minimal-parenthesis printer; parse(pretty_print(ast)) reproduces ast.
std::string pretty_print(const ExprNode& node);

bool ast_equal(const ExprNode& a, const ExprNode& b);

// Evaluation over F_p(t); division by the zero function raises
// ZeroDenominator, oversized exponents raise ExponentGuard.
algebra::RationalFunction<algebra::PrimeField> eval_expr(
    const ExprNode& node,
    const algebra::RationalFunctionField<algebra::PrimeField>& field);

} // namespace elltor::cli
