#include <doctest.h>

#include <random>
#include <string>

#include "expr_corpus.hpp"
#include "fracivp/errors.hpp"
#include "fracivp/expr.hpp"

using namespace fracivp;

TEST_CASE("precedence basics") {
    CHECK(expr::eval_xwv(expr::parse("2+3*x"), 1.0, 0.0, 0.0) == 5.0);
    CHECK(expr::eval_xwv(expr::parse("w^2 - v"), 0.0, 3.0, 1.0) == 8.0);
    CHECK(expr::eval_xwv(expr::parse("x^0.5"), 4.0, 0.0, 0.0) == 2.0);
    CHECK(expr::eval_xwv(expr::parse("exp(0)*w"), 0.0, 7.0, 0.0) == 7.0);
    CHECK(expr::eval_xwv(expr::parse("2^3^2"), 0, 0, 0) == 512.0);
    CHECK(expr::eval_xwv(expr::parse("-2^2"), 0, 0, 0) == -4.0);
}

TEST_CASE("malformed inputs carry byte offsets") {
    for (const auto& [text, offset] : testsupport::kMalformedCorpus) {
        try {
            expr::parse(std::string(text));
            FAIL_CHECK("expected ParseError for '" << std::string(text) << "'");
        } catch (const ParseError& e) {
            CHECK_MESSAGE(e.offset == offset, "input '" << std::string(text) << "'");
        }
    }
}

TEST_CASE("unknown identifiers list the allowed names") {
    try {
        expr::parse("y + 1");
        FAIL_CHECK("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("y") != std::string::npos);
        CHECK(msg.find("x, w, v") != std::string::npos);
    }
}

TEST_CASE("custom variable sets") {
    const std::vector<std::string> var_u = {"u"};
    const expr::Expr m = expr::parse("u^2", var_u);
    const double vals[1] = {3.0};
    CHECK(m.eval(vals) == 9.0);
    CHECK_THROWS_AS(expr::parse("x", var_u), ParseError);
}

TEST_CASE("evaluation domain errors") {
    CHECK_THROWS_AS(expr::eval_xwv(expr::parse("1/x"), 0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(expr::eval_xwv(expr::parse("log(x)"), 0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(expr::eval_xwv(expr::parse("sqrt(x)"), -1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(expr::eval_xwv(expr::parse("x^0.5"), -4.0, 0.0, 0.0), DomainError);
    try {
        expr::eval_xwv(expr::parse("1 + 1/(x-w)"), 2.0, 2.0, 0.0);
        FAIL_CHECK("expected DomainError");
    } catch (const DomainError& e) {
        // the message names the offending subexpression
        CHECK(std::string(e.what()).find("(1/(x-w))") != std::string::npos);
    }
}

TEST_CASE("round-trip and precedence differential over the corpus") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(0.1, 2.9);
    for (const auto& [text, parenthesized] : testsupport::kExprCorpus) {
        const expr::Expr e = expr::parse(std::string(text));
        const expr::Expr ref = expr::parse(std::string(parenthesized));
        const expr::Expr round = expr::parse(e.serialize());
        for (int k = 0; k < 1000; ++k) {
            const double x = u(rng), w = u(rng), v = u(rng);
            const double a = expr::eval_xwv(e, x, w, v);
            CHECK_MESSAGE(a == expr::eval_xwv(ref, x, w, v),
                          "differential mismatch for '" << std::string(text) << "'");
            CHECK_MESSAGE(a == expr::eval_xwv(round, x, w, v),
                          "round-trip mismatch for '" << std::string(text) << "'");
        }
    }
}
