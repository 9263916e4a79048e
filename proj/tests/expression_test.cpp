#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace schubert;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        parse_expression(text);
    } catch (const ParseError& e) {
        return e.position;
    }
    return std::string::npos;
}

} // namespace

TEST(Expression, Examples) {
    EXPECT_EQ(parse_polynomial("c1^3 + 3*c1*c2 + 2*c3"), power(c(1), 3) + Integer(3) * c(1) * c(2) + Integer(2) * c(3));
    EXPECT_EQ(parse_polynomial("s[2,1]"), c(1) * c(2) - c(3));
    EXPECT_EQ(error_position("c2 - - c1"), 5u);
}

TEST(Expression, Atoms) {
    EXPECT_EQ(parse_polynomial("c'2"), c(2, Family::CPrime));
    EXPECT_EQ(parse_polynomial("v1*v2"), gen(v1()) * gen(v2()));
    EXPECT_EQ(parse_polynomial("q[2,1]"), qtilde(Partition({2, 1})));
    EXPECT_EQ(parse_polynomial("s[2,2]"), schur_dual_jt(Partition({2, 2})));
    EXPECT_EQ(parse_polynomial("123456789012345678901234567890"), CPolynomial(Integer("123456789012345678901234567890")));
    EXPECT_EQ(parse_polynomial(" ( c1 + c2 ) ^ 2 "), power(c(1) + c(2), 2));
    EXPECT_EQ(parse_polynomial("c1 - c2 - c3"), c(1) - c(2) - c(3));
    EXPECT_EQ(parse_polynomial("2*c1^2*3"), Integer(6) * c(1) * c(1));
}

TEST(Expression, Errors) {
    EXPECT_EQ(error_position("c0"), 1u);
    EXPECT_EQ(error_position("v3"), 1u);
    EXPECT_EQ(error_position("s[1,2]"), 4u);
    EXPECT_EQ(error_position("q[2,2]"), 4u);
    EXPECT_EQ(error_position("c1 c2"), 3u);
    EXPECT_EQ(error_position("-c1"), 0u);
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("(c1"), 3u);
    EXPECT_EQ(error_position("c1^"), 3u);
    EXPECT_EQ(error_position("x1"), 0u);
    EXPECT_EQ(error_position("s[]"), 2u);
    EXPECT_EQ(error_position("s[0]"), 2u);
    EXPECT_EQ(error_position("c1 +"), 4u);
}

TEST(Expression, PrintParseRoundTripOnCorpus) {
    std::vector<std::string_view> corpus;
    for (const auto& e : kClassicalThomTable) corpus.push_back(e.polynomial);
    for (const auto& e : kLegendrianThomTable) {
        corpus.push_back(e.expression);
        corpus.push_back(e.lagrangian);
    }
    for (const char* extra : {"s[2,1]", "(c1 + c'2)^3 - v1", "q[3,1]*(v1 + 2)"}) corpus.push_back(extra);
    for (const auto text : corpus) {
        const Expr e = parse_expression(text);
        EXPECT_EQ(parse_expression(to_string(e)), e) << text;
        EXPECT_EQ(to_string(e), text) << text;
    }
}
