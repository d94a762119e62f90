#pragma once

// Expressions in one variable k for summands given on the command line.
//
// Grammar (Pratt parser), loosest to tightest:
//   + -        left associative
//   * /        left associative
//   unary -
//   ^          right associative, so -2^2 == -(2^2) and 2^3^2 == 2^(3^2)
// Atoms: numbers, k, pi, parentheses and calls sin cos tan exp log sqrt sinh
// cosh abs. Whitespace is ignored.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsum::cli {

inline constexpr std::size_t kMaxExprBytes = 4096;

enum class NodeKind { number, variable, pi, negate, add, subtract, multiply, divide, power, call };

enum class Function { sin, cos, tan, exp, log, sqrt, sinh, cosh, abs };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    NodeKind kind = NodeKind::number;
    double value = 0.0;               // number
    Function function = Function::sin;  // call
    ExprPtr lhs;                      // operand of negate/call, left of binary
    ExprPtr rhs;                      // right of binary
    std::size_t offset = 0;           // 1-based byte offset in the source
};

/// Raised by parse_expr. offset() is the 1-based byte position of the
/// offending token; end of input is size() + 1.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, std::string expected, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Raised when evaluation leaves the reals (log of a negative, division by
/// zero, overflow, ...). offset() locates the failing node.
class EvalError : public std::runtime_error {
public:
    EvalError(std::size_t offset, double k, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }
    double k() const noexcept { return k_; }

private:
    std::size_t offset_;
    double k_;
};

ExprPtr parse_expr(std::string_view text);

/// Finite value at k or EvalError.
double evaluate(const Expr& e, double k);

/// Structural equality, ignoring source offsets.
bool same_tree(const Expr& a, const Expr& b);

/// Prints with the minimum parentheses needed to reparse to the same tree.
std::string to_string(const Expr& e);

const char* function_name(Function f) noexcept;

} // namespace gsum::cli
