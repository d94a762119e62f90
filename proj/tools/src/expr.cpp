#include "gsum_cli/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

namespace gsum::cli {
namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end, bad };

struct Token {
    Tok kind = Tok::end;
    std::string_view text;
    double value = 0.0;
    std::size_t offset = 0;  // 1-based
};

constexpr std::array<std::pair<std::string_view, Function>, 9> kFunctions{{
    {"sin", Function::sin},
    {"cos", Function::cos},
    {"tan", Function::tan},
    {"exp", Function::exp},
    {"log", Function::log},
    {"sqrt", Function::sqrt},
    {"sinh", Function::sinh},
    {"cosh", Function::cosh},
    {"abs", Function::abs},
}};

// binding powers
constexpr int kAdditive = 10;
constexpr int kMultiplicative = 20;
constexpr int kUnary = 30;
constexpr int kPower = 40;

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Tok::end:
        return "end of input";
    case Tok::number:
        return "number " + std::string(t.text);
    case Tok::ident:
        return "'" + std::string(t.text) + "'";
    default:
        return "'" + std::string(t.text) + "'";
    }
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    ExprPtr parse()
    {
        auto e = expression(0);
        if (tok_.kind != Tok::end)
            fail("operator or end of input");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_;

    [[noreturn]] void fail(const std::string& expected) const
    {
        throw SyntaxError(tok_.offset, expected,
                          "syntax error at offset " + std::to_string(tok_.offset) + ": expected " +
                              expected + ", found " + describe(tok_));
    }

    void advance()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.offset = pos_ + 1;
        if (pos_ == src_.size()) {
            tok_.kind = Tok::end;
            return;
        }

        const std::size_t start = pos_;
        const char c = src_[pos_];
        const auto digit = [&](std::size_t i) {
            return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
        };

        if (digit(pos_) || (c == '.' && digit(pos_ + 1))) {
            while (digit(pos_))
                ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '.') {
                ++pos_;
                while (digit(pos_))
                    ++pos_;
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t p = pos_ + 1;
                if (p < src_.size() && (src_[p] == '+' || src_[p] == '-'))
                    ++p;
                if (digit(p)) {
                    pos_ = p;
                    while (digit(pos_))
                        ++pos_;
                }
            }
            tok_.kind = Tok::number;
            tok_.text = src_.substr(start, pos_ - start);
            const auto [ptr, ec] =
                std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), tok_.value);
            if (ec != std::errc{} || ptr != tok_.text.data() + tok_.text.size() ||
                !std::isfinite(tok_.value))
                throw SyntaxError(tok_.offset, "finite number",
                                  "syntax error at offset " + std::to_string(tok_.offset) +
                                      ": number " + std::string(tok_.text) + " out of range");
            return;
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_.kind = Tok::ident;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }

        ++pos_;
        tok_.text = src_.substr(start, 1);
        switch (c) {
        case '+': tok_.kind = Tok::plus; break;
        case '-': tok_.kind = Tok::minus; break;
        case '*': tok_.kind = Tok::star; break;
        case '/': tok_.kind = Tok::slash; break;
        case '^': tok_.kind = Tok::caret; break;
        case '(': tok_.kind = Tok::lparen; break;
        case ')': tok_.kind = Tok::rparen; break;
        default: tok_.kind = Tok::bad; break;
        }
    }

    static int left_power(Tok t)
    {
        switch (t) {
        case Tok::plus:
        case Tok::minus:
            return kAdditive;
        case Tok::star:
        case Tok::slash:
            return kMultiplicative;
        case Tok::caret:
            return kPower;
        default:
            return 0;
        }
    }

    static std::shared_ptr<Expr> make(NodeKind kind, std::size_t offset, ExprPtr lhs = {}, ExprPtr rhs = {})
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->offset = offset;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    void expect(Tok kind, const char* what)
    {
        if (tok_.kind != kind)
            fail(what);
        advance();
    }

    ExprPtr expression(int rbp)
    {
        auto left = prefix();
        while (rbp < left_power(tok_.kind)) {
            const Token op = tok_;
            advance();
            switch (op.kind) {
            case Tok::plus:
                left = make(NodeKind::add, op.offset, left, expression(kAdditive));
                break;
            case Tok::minus:
                left = make(NodeKind::subtract, op.offset, left, expression(kAdditive));
                break;
            case Tok::star:
                left = make(NodeKind::multiply, op.offset, left, expression(kMultiplicative));
                break;
            case Tok::slash:
                left = make(NodeKind::divide, op.offset, left, expression(kMultiplicative));
                break;
            default:  // caret
                left = make(NodeKind::power, op.offset, left, expression(kPower - 1));
                break;
            }
        }
        return left;
    }

    ExprPtr prefix()
    {
        const Token t = tok_;
        switch (t.kind) {
        case Tok::number: {
            advance();
            auto e = make(NodeKind::number, t.offset);
            e->value = t.value;
            return e;
        }
        case Tok::minus:
            advance();
            return make(NodeKind::negate, t.offset, expression(kUnary));
        case Tok::lparen: {
            advance();
            auto inner = expression(0);
            expect(Tok::rparen, "')'");
            return inner;
        }
        case Tok::ident:
            break;
        default:
            fail("number, k, pi, function or '('");
        }

        if (t.text == "k") {
            advance();
            return make(NodeKind::variable, t.offset);
        }
        if (t.text == "pi") {
            advance();
            return make(NodeKind::pi, t.offset);
        }
        for (const auto& [name, fn] : kFunctions) {
            if (t.text != name)
                continue;
            advance();
            expect(Tok::lparen, "'('");
            auto arg = expression(0);
            expect(Tok::rparen, "')'");
            auto e = make(NodeKind::call, t.offset, arg);
            e->function = fn;
            return e;
        }
        throw SyntaxError(t.offset, "k, pi or a function name",
                          "syntax error at offset " + std::to_string(t.offset) +
                              ": unknown identifier '" + std::string(t.text) + "'");
    }
};

int precedence(const Expr& e)
{
    switch (e.kind) {
    case NodeKind::add:
    case NodeKind::subtract:
        return 1;
    case NodeKind::multiply:
    case NodeKind::divide:
        return 2;
    case NodeKind::negate:
        return 3;
    case NodeKind::power:
        return 4;
    default:
        return 5;
    }
}

std::string wrap(const Expr& e, bool parens)
{
    return parens ? "(" + to_string(e) + ")" : to_string(e);
}

double checked(double v, const Expr& e, double k, const char* what)
{
    if (!std::isfinite(v))
        throw EvalError(e.offset, k, what);
    return v;
}

} // namespace

SyntaxError::SyntaxError(std::size_t offset, std::string expected, const std::string& message)
    : std::runtime_error(message), offset_(offset), expected_(std::move(expected))
{
}

EvalError::EvalError(std::size_t offset, double k, const std::string& message)
    : std::runtime_error("evaluation error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset), k_(k)
{
}

ExprPtr parse_expr(std::string_view text)
{
    if (text.size() > kMaxExprBytes)
        throw SyntaxError(kMaxExprBytes + 1, "at most 4096 bytes", "expression longer than 4096 bytes");
    return Parser(text).parse();
}

const char* function_name(Function f) noexcept
{
    for (const auto& [name, fn] : kFunctions)
        if (fn == f)
            return name.data();
    return "?";
}

double evaluate(const Expr& e, double k)
{
    switch (e.kind) {
    case NodeKind::number:
        return e.value;
    case NodeKind::variable:
        return k;
    case NodeKind::pi:
        return std::numbers::pi;
    case NodeKind::negate:
        return -evaluate(*e.lhs, k);
    case NodeKind::add:
        return checked(evaluate(*e.lhs, k) + evaluate(*e.rhs, k), e, k, "overflow in '+'");
    case NodeKind::subtract:
        return checked(evaluate(*e.lhs, k) - evaluate(*e.rhs, k), e, k, "overflow in '-'");
    case NodeKind::multiply:
        return checked(evaluate(*e.lhs, k) * evaluate(*e.rhs, k), e, k, "overflow in '*'");
    case NodeKind::divide: {
        const double num = evaluate(*e.lhs, k);
        const double den = evaluate(*e.rhs, k);
        if (den == 0.0)
            throw EvalError(e.offset, k, "division by zero");
        return checked(num / den, e, k, "overflow in '/'");
    }
    case NodeKind::power:
        return checked(std::pow(evaluate(*e.lhs, k), evaluate(*e.rhs, k)), e, k,
                       "'^' has no finite real value");
    case NodeKind::call:
        break;
    }

    const double x = evaluate(*e.lhs, k);
    switch (e.function) {
    case Function::sin:
        return std::sin(x);
    case Function::cos:
        return std::cos(x);
    case Function::tan:
        return checked(std::tan(x), e, k, "tan overflow");
    case Function::exp:
        return checked(std::exp(x), e, k, "exp overflow");
    case Function::log:
        if (!(x > 0.0))
            throw EvalError(e.offset, k, "log of a non-positive number");
        return std::log(x);
    case Function::sqrt:
        if (x < 0.0)
            throw EvalError(e.offset, k, "sqrt of a negative number");
        return std::sqrt(x);
    case Function::sinh:
        return checked(std::sinh(x), e, k, "sinh overflow");
    case Function::cosh:
        return checked(std::cosh(x), e, k, "cosh overflow");
    case Function::abs:
        return std::abs(x);
    }
    return x;
}

bool same_tree(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind)
        return false;
    if (a.kind == NodeKind::number && a.value != b.value)
        return false;
    if (a.kind == NodeKind::call && a.function != b.function)
        return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs) ||
        static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs))
        return false;
    return (!a.lhs || same_tree(*a.lhs, *b.lhs)) && (!a.rhs || same_tree(*a.rhs, *b.rhs));
}

std::string to_string(const Expr& e)
{
    switch (e.kind) {
    case NodeKind::number: {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, e.value);
        return std::string(buf, res.ptr);
    }
    case NodeKind::variable:
        return "k";
    case NodeKind::pi:
        return "pi";
    case NodeKind::negate:
        return "-" + wrap(*e.lhs, precedence(*e.lhs) < 3);
    case NodeKind::call:
        return std::string(function_name(e.function)) + "(" + to_string(*e.lhs) + ")";
    case NodeKind::power:
        return wrap(*e.lhs, precedence(*e.lhs) <= 4) + "^" + wrap(*e.rhs, precedence(*e.rhs) < 4);
    default:
        break;
    }

    const int p = precedence(e);
    const char* op = e.kind == NodeKind::add        ? " + "
                     : e.kind == NodeKind::subtract ? " - "
                     : e.kind == NodeKind::multiply ? " * "
                                                    : " / ";
    return wrap(*e.lhs, precedence(*e.lhs) < p) + op + wrap(*e.rhs, precedence(*e.rhs) <= p);
}

} // namespace gsum::cli
