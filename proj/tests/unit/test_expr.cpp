#include <gsum_cli/expr.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace gsum::cli;
constexpr double pi = std::numbers::pi;

double eval(std::string_view text, double k = 1.0)
{
    return evaluate(*parse_expr(text), k);
}

TEST(Parse, Examples)
{
    EXPECT_NEAR(eval("sin(40/k)/k", 40), std::sin(1.0) / 40, 1e-17);
    EXPECT_NEAR(eval("sin(40/k)/k", 40), 0.0210368, 1e-7);
    EXPECT_DOUBLE_EQ(eval("1/(1000^2+k^2)", 1000), 5e-7);
}

TEST(Parse, Precedence)
{
    EXPECT_EQ(eval("-2^2"), -4.0);
    EXPECT_EQ(eval("2^3^2"), 512.0);
    EXPECT_EQ(eval("2^-1"), 0.5);
    EXPECT_EQ(eval("(-2)^2"), 4.0);
    EXPECT_EQ(eval("1-2-3"), -4.0);
    EXPECT_EQ(eval("8/4/2"), 1.0);
    EXPECT_EQ(eval("1+2*3"), 7.0);
    EXPECT_EQ(eval("-3*-2"), 6.0);
    EXPECT_EQ(eval("--3"), 3.0);
    EXPECT_EQ(eval("2*k^2", 3), 18.0);
    EXPECT_EQ(eval("-k^2", 3), -9.0);
}

TEST(Parse, AtomsAndWhitespace)
{
    EXPECT_EQ(eval("pi"), pi);
    EXPECT_EQ(eval(" k ", 2.5), 2.5);
    EXPECT_EQ(eval("1.5e3"), 1500.0);
    EXPECT_EQ(eval(".25"), 0.25);
    EXPECT_EQ(eval("\tsqrt ( 16 )\n"), 4.0);
    EXPECT_EQ(eval("abs(-3)"), 3.0);
    EXPECT_DOUBLE_EQ(eval("exp(log(7))"), 7.0);
    EXPECT_DOUBLE_EQ(eval("cosh(k)^2 - sinh(k)^2", 0.7), 1.0);
    EXPECT_DOUBLE_EQ(eval("tan(k) - sin(k)/cos(k)", 0.3) + 1, 1.0);
}

TEST(Parse, OffsetsAreRecorded)
{
    const auto e = parse_expr("1 + k");
    EXPECT_EQ(e->kind, NodeKind::add);
    EXPECT_EQ(e->lhs->offset, 1u);
    EXPECT_EQ(e->rhs->offset, 5u);
    EXPECT_EQ(e->rhs->kind, NodeKind::variable);
}

struct SyntaxCase {
    std::string text;
    std::size_t offset;
};

TEST(Parse, SyntaxErrorsCarryOffsets)
{
    const std::vector<SyntaxCase> cases{
        {"sin(40/k", 9},  {"", 1},        {"1 +", 4},      {"(1", 3},   {"1)", 2},
        {"x", 1},         {"k k", 3},     {"sinh", 5},     {"foo(1)", 1}, {"2 * * 3", 5},
        {"1e999", 1},     {"sin 1", 5},   {"k$", 2},       {"()", 2},
    };
    for (const auto& c : cases) {
        try {
            parse_expr(c.text);
            ADD_FAILURE() << "accepted: " << c.text;
        } catch (const SyntaxError& e) {
            EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
            EXPECT_FALSE(e.expected().empty()) << c.text;
        }
    }
}

TEST(Parse, MissingParenExpectation)
{
    try {
        parse_expr("sin(40/k");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.offset(), 9u);
        EXPECT_EQ(e.expected(), "')'");
    }
}

TEST(Parse, LengthLimit)
{
    std::string text = "k";
    while (text.size() + 2 <= kMaxExprBytes)
        text += "+k";
    EXPECT_NO_THROW(parse_expr(text));
    text += "+k";
    ASSERT_GT(text.size(), kMaxExprBytes);
    EXPECT_THROW(parse_expr(text), SyntaxError);
}

TEST(Parse, DeepNestingWithinLimit)
{
    std::string text(1000, '(');
    text += "k";
    text += std::string(1000, ')');
    EXPECT_EQ(eval(text, 3.0), 3.0);
}

TEST(Evaluate, LocatedErrors)
{
    struct Case {
        std::string text;
        double k;
        std::size_t offset;
    };
    const std::vector<Case> cases{
        {"1/(k-1)", 1.0, 2},
        {"log(k-2)", 1.0, 1},
        {"2 + sqrt(-k)", 1.0, 5},
        {"exp(k)", 1000.0, 1},
        {"k^k", 1000.0, 2},
    };
    for (const auto& c : cases) {
        try {
            eval(c.text, c.k);
            ADD_FAILURE() << "no error: " << c.text;
        } catch (const EvalError& e) {
            EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
            EXPECT_EQ(e.k(), c.k);
        }
    }
}

TEST(Evaluate, FiniteForPositiveK)
{
    const auto e = parse_expr("sin(40/k)/k + 1/(1000^2+k^2)");
    for (double k = 0.5; k < 1e6; k *= 3)
        EXPECT_TRUE(std::isfinite(evaluate(*e, k)));
}

// Round trip corpus: printing then reparsing yields the same tree.
const std::vector<std::string> kCorpus{
    "k",
    "pi",
    "-k",
    "--k",
    "-(-k)",
    "1/k^2",
    "1/(1000^2+k^2)",
    "sin(40/k)/k",
    "-2^2",
    "(-2)^2",
    "2^3^2",
    "(2^3)^2",
    "2^-1",
    "2^-k^2",
    "-k^-2",
    "1-2-3",
    "1-(2-3)",
    "1/(2/3)",
    "(1/2)/3",
    "1/2*3",
    "1/(2*3)",
    "(1+2)*(3+4)",
    "1+2*3",
    "(1+2)*3",
    "k*(k+1)*(k+2)",
    "exp(-k^2)",
    "exp(-k)^2",
    "log(1+1/k)",
    "sqrt(k)/(1+k^3)",
    "abs(sin(k))/k^2",
    "cosh(1/k)-1",
    "sinh(1/k)^2",
    "tan(1/k)/k",
    "cos(pi/k)",
    "1e-3*k",
    "0.1+0.2",
    "1.7976931348623157e308/k",
    "5e-324+k",
    "123456789.123456789",
    "k^0.5",
    "(k^2)^0.25",
    "-(k+1)",
    "-(k*2)",
    "-(k/2)",
    "(-k)*2",
    "k-(-1)",
    "k+-1",
    "k*-1",
    "sin(cos(tan(k)))",
    "((((k))))",
    "2*pi*k",
    "1/(k*(k+1))",
    "(1+1/k)^k",
};

TEST(RoundTrip, CorpusReparsesToSameTree)
{
    ASSERT_GE(kCorpus.size(), 50u);
    for (const auto& text : kCorpus) {
        const auto tree = parse_expr(text);
        const std::string printed = to_string(*tree);
        const auto again = parse_expr(printed);
        EXPECT_TRUE(same_tree(*tree, *again)) << text << " -> " << printed;
        EXPECT_EQ(to_string(*again), printed) << text;
    }
}

TEST(RoundTrip, MinimalParentheses)
{
    EXPECT_EQ(to_string(*parse_expr("((1+2))*3")), "(1 + 2) * 3");
    EXPECT_EQ(to_string(*parse_expr("(1*2)+3")), "1 * 2 + 3");
    EXPECT_EQ(to_string(*parse_expr("1-(2-3)")), "1 - (2 - 3)");
    EXPECT_EQ(to_string(*parse_expr("(2^3)^2")), "(2^3)^2");
    EXPECT_EQ(to_string(*parse_expr("2^(3^2)")), "2^3^2");
    EXPECT_EQ(to_string(*parse_expr("(-2)^2")), "(-2)^2");
    EXPECT_EQ(to_string(*parse_expr("-(2^2)")), "-2^2");
    EXPECT_EQ(to_string(*parse_expr(" sin( k ) ")), "sin(k)");
}

TEST(RoundTrip, SameTreeDistinguishesStructure)
{
    EXPECT_FALSE(same_tree(*parse_expr("1-2-3"), *parse_expr("1-(2-3)")));
    EXPECT_FALSE(same_tree(*parse_expr("sin(k)"), *parse_expr("cos(k)")));
    EXPECT_FALSE(same_tree(*parse_expr("1"), *parse_expr("2")));
    EXPECT_TRUE(same_tree(*parse_expr("1 + k"), *parse_expr("1+k")));
}

TEST(Functions, Names)
{
    EXPECT_STREQ(function_name(Function::sin), "sin");
    EXPECT_STREQ(function_name(Function::cosh), "cosh");
    EXPECT_STREQ(function_name(Function::abs), "abs");
}

} // namespace
