#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "swh/dioph.hpp"
#include "swh/eval.hpp"
#include "swh/linearize.hpp"
#include "swh/parser.hpp"

using namespace swh;

namespace {
DiophantineEquation eq1(std::vector<Term> terms) {
    const std::size_t m = terms.front().exponents.size();
    return DiophantineEquation(m, std::move(terms));
}
}  // namespace

TEST_CASE("equation invariants") {
    CHECK_THROWS_AS(DiophantineEquation(1, {}), SchemaError);
    CHECK_THROWS_AS(DiophantineEquation(2, {Term{1, {1}}}), SchemaError);
    CHECK_THROWS_AS(DiophantineSystem({}), SchemaError);
    CHECK_THROWS_AS(DiophantineSystem({eq1({{1, {1}}}), eq1({{1, {1, 0}}})}), SchemaError);
}

TEST_CASE("compile_equation examples") {
    // x^2 - 2
    auto sh = compile_equation(eq1({{1, {2}}, {-2, {0}}}));
    CHECK(pretty(sh) == "a^2 - 2");
    CHECK(is_letter_restricted(*sh));
    CHECK(evaluate(sh, "aa") == 2);

    // x^2 + y - 2
    auto sh2 = compile_equation(eq1({{1, {2, 0}}, {1, {0, 1}}, {-2, {0, 0}}}));
    CHECK(pretty(sh2) == "a^2 + b - 2");
    CHECK(linearize(sh2) == LinearForm{{"a", 1}, {"aa", 2}, {"b", 1}, {"", -2}});

    // zero polynomial
    auto zero = compile_equation(eq1({{0, {0}}}));
    CHECK(pretty(zero) == "0");
    for (const auto& w : testing::all_words("a", 5)) CHECK(evaluate(zero, w) == 0);

    auto sh3 = compile_equation(eq1({{-3, {1, 2}}, {1, {0, 0}}}));
    CHECK(pretty(sh3) == "-3*(a*b^2) + 1");
}

TEST_CASE("compile_equation honours the supplied alphabet") {
    auto sh = compile_equation(eq1({{1, {1, 1}}}), Alphabet("xyz"));
    CHECK(pretty(sh) == "x*y");
    CHECK_THROWS_AS(compile_equation(eq1({{1, {1, 1}}}), Alphabet("x")), SchemaError);
    CHECK_THROWS_AS(compile_equation(DiophantineEquation(27, {Term{1, std::vector<std::uint32_t>(27, 1)}})), SchemaError);
}

TEST_CASE("compiled equations evaluate the polynomial at the Parikh vector") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        const std::size_t m = static_cast<std::size_t>(1 + i % 3);
        auto eq = testing::random_equation(rng, m, 3, 5);
        auto sh = compile_equation(eq);
        CHECK(is_letter_restricted(*sh));
        const Alphabet sigma = Alphabet::first(m);
        for (const auto& w : testing::all_words(sigma.letters(), 4)) {
            std::vector<long> point(m, 0);
            for (char c : w) ++point[static_cast<std::size_t>(c - 'a')];
            CHECK(evaluate(sh, w) == testing::brute_polynomial(eq, point));
        }
    }
}

TEST_CASE("compile_system examples") {
    DiophantineSystem one({eq1({{1, {1}}, {-1, {0}}})});
    auto sh = compile_system(one);
    CHECK(pretty(sh) == "(a - 1)*(a - 1) + 1");
    CHECK(evaluate(sh, "a") == 1);
    CHECK(evaluate(sh, "") == 2);

    DiophantineSystem trivial({eq1({{0, {0}}})});
    auto t = compile_system(trivial);
    for (const auto& w : testing::all_words("a", 4)) CHECK(evaluate(t, w) == 1);

    DiophantineSystem inconsistent({eq1({{1, {1}}, {-1, {0}}}), eq1({{1, {1}}, {-2, {0}}})});
    auto u = compile_system(inconsistent);
    for (unsigned n = 0; n <= 5; ++n) CHECK(evaluate(u, std::string(n, 'a')) > 1);
    CHECK(system_factors(inconsistent).size() == 2);
}

TEST_CASE("ses_to_sit and strict_to_nonstrict") {
    Alphabet ab("ab");
    auto d = ses_to_sit(mono("a"), mono("b"));
    CHECK(evaluate(d, "ab") == 0);
    CHECK(evaluate(d, "a") == 1);
    auto z = ses_to_sit(mono("a"), mono("a"));
    auto e = ses_to_sit(parse("a*b", ab), parse("ab + ba", ab));
    for (const auto& w : testing::all_words("ab", 6)) {
        CHECK(evaluate(z, w) == 0);
        CHECK(evaluate(e, w) == 0);
        BigInt v = evaluate(d, w), r = sqrt(v);
        CHECK(v >= 0);
        CHECK(r * r == v);
    }

    auto one = strict_to_nonstrict(lambda());
    auto a = strict_to_nonstrict(mono("a"));
    CHECK(evaluate(a, "") == -1);
    CHECK(evaluate(a, "a") == 0);
    auto sq = strict_to_nonstrict(parse("(a - b)^2 + 1", ab));
    for (const auto& w : testing::all_words("ab", 6)) {
        CHECK(evaluate(one, w) == 0);
        CHECK(evaluate(sq, w) >= 0);
        CHECK(evaluate(sq, w) == evaluate(parse("(a-b)^2", ab), w));
    }
}

TEST_CASE("shift to positive variables") {
    // x^2 - 4 becomes (x+1)^2 - 4 = x^2 + 2x - 3
    auto shifted = eq1({{1, {2}}, {-4, {0}}}).shifted_positive();
    CHECK(shifted.terms() == std::vector<Term>{{1, {2}}, {2, {1}}, {-3, {0}}});
    CHECK(pretty(compile_equation(shifted)) == "a^2 + 2*a - 3");

    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        auto eq = testing::random_equation(rng, 2, 3, 5);
        auto s = eq.shifted_positive();
        for (long x = 0; x <= 3; ++x)
            for (long y = 0; y <= 3; ++y)
                CHECK(testing::brute_polynomial(s, {x, y}) == testing::brute_polynomial(eq, {x + 1, y + 1}));
    }
    auto cancels = eq1({{1, {1}}, {-1, {1}}}).shifted_positive();
    CHECK(cancels.terms() == std::vector<Term>{{0, {0}}});
}

TEST_CASE("JSON documents") {
    const std::string text = R"({ "variables": ["x","y"],
        "equations": [ { "terms": [ {"coeff": 1, "exponents": [2,0]},
                                    {"coeff": 1, "exponents": [0,1]},
                                    {"coeff": -2, "exponents": [0,0]} ] } ],
        "shift_positive": false })";
    auto doc = parse_document(text);
    CHECK(doc.variables == std::vector<std::string>{"x", "y"});
    CHECK_FALSE(doc.shift_positive);
    REQUIRE(doc.system.equations().size() == 1);
    CHECK(pretty(compile_equation(doc.system.equations()[0])) == "a^2 + b - 2");
    CHECK(parse_document(to_json(doc)).system.equations() == doc.system.equations());
}

TEST_CASE("big coefficients travel as strings") {
    const BigInt safe("9007199254740991"), unsafe("9007199254740992");
    CHECK(bigint_to_json(safe).is_number_integer());
    CHECK(bigint_to_json(-safe).is_number_integer());
    CHECK(bigint_to_json(unsafe) == "9007199254740992");
    CHECK(bigint_from_json(nlohmann::json("-123456789012345678901234567890")) == BigInt("-123456789012345678901234567890"));
    CHECK(bigint_from_json(nlohmann::json(42)) == 42);
    CHECK_THROWS_AS(bigint_from_json(nlohmann::json("12x")), SchemaError);
    CHECK_THROWS_AS(bigint_from_json(nlohmann::json(1.5)), SchemaError);

    DiophantineDocument doc{{"x"}, DiophantineSystem({eq1({{BigInt("100000000000000000000"), {1}}})}), true};
    auto j = to_json(doc);
    CHECK(j["equations"][0]["terms"][0]["coeff"] == "100000000000000000000");
    CHECK(parse_document(j).system.equations() == doc.system.equations());
    CHECK(parse_document(j).shift_positive);
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(parse_document(std::string("{")), SchemaError);
    CHECK_THROWS_AS(parse_document(std::string(R"({"equations": []})")), SchemaError);
    CHECK_THROWS_AS(parse_document(std::string(R"({"variables": ["x"], "equations": []})")), SchemaError);
    CHECK_THROWS_AS(parse_document(std::string(R"({"variables": ["x"], "equations": [{"terms": []}]})")), SchemaError);
    CHECK_THROWS_AS(parse_document(std::string(R"({"variables": ["x"], "equations": [{"terms": [{"coeff": 1, "exponents": [1, 2]}]}]})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_document(std::string(R"({"variables": ["x"], "equations": [{"terms": [{"coeff": 1, "exponents": [-1]}]}]})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_document(std::string(R"({"variables": ["x"], "equations": [{"terms": [{"exponents": [1]}]}]})")),
                    SchemaError);
    CHECK_THROWS_AS(
        parse_document(std::string(R"({"variables": ["x"], "equations": [{"terms": [{"coeff": 1, "exponents": [1]}]}], "shift_positive": 1})")),
        SchemaError);
}
